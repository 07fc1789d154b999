#include "ncspectra/output.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <vector>

namespace ncspectra::output {

namespace {

using ordered_json = nlohmann::ordered_json;

// shortest form that still round-trips a double
std::string fmt_full(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  double back = 0;
  std::sscanf(buf, "%lg", &back);
  if (back == v) {
    // try to shorten
    for (int prec = 1; prec <= 16; ++prec) {
      char shorter[64];
      std::snprintf(shorter, sizeof shorter, "%.*g", prec, v);
      std::sscanf(shorter, "%lg", &back);
      if (back == v)
        return shorter;
    }
  }
  return buf;
}

std::string fmt_short(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string opt_str(const std::optional<int>& v) {
  return v ? std::to_string(*v) : std::string();
}

} // namespace

OutputRecord to_record(const spectrum::EnergyLevel& level) {
  OutputRecord rec;
  if (const auto* u = std::get_if<UncoupledState>(&level.state)) {
    rec.n = u->n;
    rec.l = u->l;
    rec.m = u->m;
  } else {
    const auto& c = std::get<CoupledState>(level.state);
    rec.n = c.n;
    rec.l = c.l;
    rec.j2 = c.j.twice();
    rec.jz2 = c.jz.twice();
  }
  if (level.term)
    rec.term = spectrum::format_term_symbol(*level.term);
  rec.e0_hartree = level.e0;
  rec.shift_coeff_num = level.delta_e_per_theta.num();
  rec.shift_coeff_den = level.delta_e_per_theta.den();
  rec.delta_e_hartree = level.delta_e;
  return rec;
}

std::string to_json(const std::vector<OutputRecord>& records) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : records) {
    ordered_json row;
    row["n"] = r.n;
    row["l"] = r.l;
    if (r.j2)
      row["j2"] = *r.j2;
    if (r.jz2)
      row["jz2"] = *r.jz2;
    if (r.m)
      row["m"] = *r.m;
    row["term"] = r.term;
    row["e0_hartree"] = r.e0_hartree;
    row["shift_coeff_num"] = r.shift_coeff_num;
    row["shift_coeff_den"] = r.shift_coeff_den;
    row["delta_e_hartree"] = r.delta_e_hartree;
    arr.push_back(std::move(row));
  }
  return arr.dump(2) + "\n";
}

std::vector<OutputRecord> from_json(const std::string& text) {
  const ordered_json arr = ordered_json::parse(text);
  std::vector<OutputRecord> out;
  out.reserve(arr.size());
  for (const auto& row : arr) {
    OutputRecord r;
    r.n = row.at("n").get<int>();
    r.l = row.at("l").get<int>();
    if (row.contains("j2"))
      r.j2 = row.at("j2").get<int>();
    if (row.contains("jz2"))
      r.jz2 = row.at("jz2").get<int>();
    if (row.contains("m"))
      r.m = row.at("m").get<int>();
    r.term = row.at("term").get<std::string>();
    r.e0_hartree = row.at("e0_hartree").get<double>();
    r.shift_coeff_num = row.at("shift_coeff_num").get<long long>();
    r.shift_coeff_den = row.at("shift_coeff_den").get<long long>();
    r.delta_e_hartree = row.at("delta_e_hartree").get<double>();
    out.push_back(std::move(r));
  }
  return out;
}

std::string to_csv(const std::vector<OutputRecord>& records) {
  std::ostringstream os;
  os << "n,l,j2,jz2,m,term,e0_hartree,shift_coeff_num,shift_coeff_den,"
        "delta_e_hartree\n";
  for (const auto& r : records) {
    os << r.n << ',' << r.l << ',' << opt_str(r.j2) << ',' << opt_str(r.jz2)
       << ',' << opt_str(r.m) << ',' << r.term << ',' << fmt_full(r.e0_hartree)
       << ',' << r.shift_coeff_num << ',' << r.shift_coeff_den << ','
       << fmt_full(r.delta_e_hartree) << '\n';
  }
  return os.str();
}

std::string to_table(const std::vector<OutputRecord>& records) {
  static const char* headers[] = {"n",  "l",    "j2",         "jz2",
                                  "m",  "term", "e0_hartree", "shift/theta",
                                  "delta_e_hartree"};
  constexpr int ncols = 9;

  std::vector<std::vector<std::string>> rows;
  rows.reserve(records.size());
  for (const auto& r : records) {
    std::string coeff = std::to_string(r.shift_coeff_num);
    if (r.shift_coeff_den != 1)
      coeff += "/" + std::to_string(r.shift_coeff_den);
    rows.push_back({std::to_string(r.n), std::to_string(r.l),
                    r.j2 ? std::to_string(*r.j2) : "-",
                    r.jz2 ? std::to_string(*r.jz2) : "-",
                    r.m ? std::to_string(*r.m) : "-",
                    r.term.empty() ? "-" : r.term, fmt_short(r.e0_hartree),
                    coeff, fmt_short(r.delta_e_hartree)});
  }

  std::size_t width[ncols];
  for (int c = 0; c < ncols; ++c) {
    width[c] = std::string(headers[c]).size();
    for (const auto& row : rows)
      width[c] = std::max(width[c], row[c].size());
  }

  std::ostringstream os;
  auto emit = [&](const std::vector<std::string>& row) {
    for (int c = 0; c < ncols; ++c) {
      if (c)
        os << "  ";
      os << row[c] << std::string(width[c] - row[c].size(), ' ');
    }
    os << '\n';
  };
  emit(std::vector<std::string>(headers, headers + ncols));
  for (const auto& row : rows)
    emit(row);
  return os.str();
}

//==============================================================================
// splitting report

namespace {

struct LambRow {
  std::string label;
  std::optional<int> jz2;
  long long num, den;
  double shift;
};

std::vector<LambRow> lamb_rows(const spectrum::LambReport& rep) {
  std::vector<LambRow> rows;
  rows.push_back({spectrum::format_term_symbol(rep.s_label), std::nullopt,
                  rep.s_shift_coeff.num(), rep.s_shift_coeff.den(),
                  rep.s_shift});
  for (const auto& sub : rep.p_sublevels)
    rows.push_back({spectrum::format_term_symbol(sub.label), sub.jz.twice(),
                    sub.shift_coeff.num(), sub.shift_coeff.den(), sub.shift});
  return rows;
}

} // namespace

std::string lamb_to_json(const spectrum::LambReport& rep) {
  ordered_json j;
  j["theta_z"] = rep.theta_z;
  ordered_json levels = ordered_json::array();
  for (const auto& row : lamb_rows(rep)) {
    ordered_json lv;
    lv["label"] = row.label;
    if (row.jz2)
      lv["jz2"] = *row.jz2;
    lv["shift_coeff_num"] = row.num;
    lv["shift_coeff_den"] = row.den;
    lv["shift_hartree"] = row.shift;
    levels.push_back(std::move(lv));
  }
  j["levels"] = std::move(levels);
  j["splitting_coeff_num"] = rep.splitting_coeff.num();
  j["splitting_coeff_den"] = rep.splitting_coeff.den();
  j["splitting_hartree"] = rep.splitting;
  j["note"] = rep.note;
  return j.dump(2) + "\n";
}

std::string lamb_to_csv(const spectrum::LambReport& rep) {
  std::ostringstream os;
  os << "label,jz2,shift_coeff_num,shift_coeff_den,shift_hartree\n";
  for (const auto& row : lamb_rows(rep))
    os << row.label << ',' << opt_str(row.jz2) << ',' << row.num << ','
       << row.den << ',' << fmt_full(row.shift) << '\n';
  return os.str();
}

std::string lamb_to_table(const spectrum::LambReport& rep) {
  std::ostringstream os;
  os << "n=2 first-order splitting at theta_z = " << fmt_short(rep.theta_z)
     << " Bohr^2\n\n";
  for (const auto& row : lamb_rows(rep)) {
    std::string coeff = std::to_string(row.num);
    if (row.den != 1)
      coeff += "/" + std::to_string(row.den);
    os << "  " << row.label << "  shift/theta = " << coeff
       << "  shift = " << fmt_short(row.shift) << " hartree\n";
  }
  os << "\nsublevel splitting: (" << rep.splitting_coeff.str()
     << ") theta_z = " << fmt_short(rep.splitting) << " hartree\n";
  os << rep.note << '\n';
  return os.str();
}

} // namespace ncspectra::output
