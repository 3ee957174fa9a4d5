#include "qmult/report_io.hpp"

#include <sstream>

namespace qmult {

using nlohmann::json;

json to_json(const QPolynomial& p) { return json{{"coeffs", p.coeffs()}}; }

json to_json(const WeightCharacter& wc) {
  json out = json::array();
  for (const auto& [w, m] : wc.mults) out.push_back(json{{"mult", m}, {"weight", w.coords}});
  return out;
}

json report_json(const RootSystem& rs, const ParabolicSubset& p, const Weight& mu,
                 const HilbertReport& report) {
  json terms = json::array();
  for (const auto& [lambda, poly] : report.series.terms)
    terms.push_back(json{{"lambda", lambda.coords}, {"poly", poly.coeffs()}});
  return json{{"covered", report.covered},
              {"dims", report.dims},
              {"levi", p.levi_indices},
              {"max_degree", report.series.max_degree},
              {"mu", mu.coords},
              {"terms", terms},
              {"type", type_name(rs.series, rs.rank)},
              {"vanishing", vanishing_case_name(report.vanishing)}};
}

namespace {

std::string levi_str(const ParabolicSubset& p) {
  if (p.is_borel()) return "{} (Borel)";
  std::string s = "{";
  for (std::size_t i = 0; i < p.levi_indices.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p.levi_indices[i]);
  }
  return s + "}";
}

}  // namespace

std::string report_text(const RootSystem& rs, const ParabolicSubset& p, const Weight& mu,
                        const HilbertReport& report) {
  std::ostringstream os;
  os << "type " << type_name(rs.series, rs.rank) << "  levi " << levi_str(p) << "  mu "
     << str(mu) << "  max degree " << report.series.max_degree << "\n";
  os << "vanishing case: " << vanishing_case_name(report.vanishing)
     << (report.covered ? "  (series is the Hilbert series)"
                        : "  (Euler character only; Hilbert-series reading is conjectural)")
     << "\n";
  os << "lambda";
  for (std::size_t i = 6; i < 20; ++i) os << ' ';
  os << "coefficient\n";
  for (const auto& [lambda, poly] : report.series.terms) {
    const std::string ls = str(lambda);
    os << ls;
    for (std::size_t i = ls.size(); i < 20; ++i) os << ' ';
    os << poly.text() << "\n";
  }
  os << "dims:";
  for (i64 d : report.dims) os << ' ' << d;
  os << "\n";
  return os.str();
}

std::string latex_poly(const QPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int m = 0; m <= p.degree(); ++m) {
    const i64 c = p.coeff(m);
    if (c == 0) continue;
    const i64 mag = c < 0 ? checked_neg(c) : c;
    std::string term;
    if (m == 0) {
      term = std::to_string(mag);
    } else {
      if (mag != 1) term = std::to_string(mag) + "\\,";
      term += m == 1 ? "q" : "q^{" + std::to_string(m) + "}";
    }
    if (out.empty())
      out = (c < 0 ? "-" : "") + term;
    else
      out += (c < 0 ? " - " : " + ") + term;
  }
  return out;
}

std::string report_latex(const RootSystem& rs, const ParabolicSubset& p, const Weight& mu,
                         const HilbertReport& report) {
  std::ostringstream os;
  os << "% " << type_name(rs.series, rs.rank) << ", levi " << levi_str(p) << ", mu " << str(mu)
     << ", max degree " << report.series.max_degree << ", vanishing "
     << vanishing_case_name(report.vanishing) << "\n";
  os << "\\begin{tabular}{ll}\n";
  os << "$\\lambda$ & coefficient \\\\\n\\hline\n";
  for (const auto& [lambda, poly] : report.series.terms) {
    os << "$" << str(lambda) << "$ & $" << latex_poly(poly) << "$ \\\\\n";
  }
  os << "\\end{tabular}\n";
  return os.str();
}

std::string character_text(const RootSystem& rs, const Weight& lambda,
                           const WeightCharacter& wc) {
  std::ostringstream os;
  os << "highest weight " << str(lambda) << "  dim " << wc.total() << "\n";
  os << "weight";
  for (std::size_t i = 6; i < 20; ++i) os << ' ';
  os << "mult\n";
  for (const auto& [w, m] : wc.mults) {
    const std::string ws = str(w);
    os << ws;
    for (std::size_t i = ws.size(); i < 20; ++i) os << ' ';
    os << m << "\n";
  }
  (void)rs;
  return os.str();
}

std::string root_datum_text(const RootSystem& rs) {
  std::ostringstream os;
  os << "type " << type_name(rs.series, rs.rank) << "  rank " << rs.rank << "\n";
  os << "cartan matrix (rows: <alpha_j, alpha_i^vee>):\n";
  for (const auto& row : rs.cartan) {
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "  ") << row[j];
    os << "\n";
  }
  os << "positive roots (" << rs.positive_roots.size() << "), root basis -> fundamental basis:\n";
  for (std::size_t k = 0; k < rs.positive_roots.size(); ++k)
    os << "  " << str(rs.positive_roots[k]) << " -> " << str(rs.positive_root_weights[k]) << "\n";
  os << "highest root: " << str(rs.highest_root) << " -> "
     << str(root_to_weight(rs, rs.highest_root)) << "\n";
  os << "rho: " << str(rho(rs)) << "\n";
  return os.str();
}

json root_datum_json(const RootSystem& rs) {
  json roots = json::array();
  for (const auto& r : rs.positive_roots) roots.push_back(r.coords);
  return json{{"cartan", rs.cartan},
              {"highest_root", rs.highest_root.coords},
              {"positive_roots", roots},
              {"rank", rs.rank},
              {"type", type_name(rs.series, rs.rank)}};
}

}  // namespace qmult
