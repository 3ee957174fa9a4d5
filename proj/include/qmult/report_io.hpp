#pragma once

// Serialization: JSON (canonical key order, integers only), plain text, and
// LaTeX. JSON emitted here round-trips byte-identically through parse+dump.

#include <string>

#include "json.hpp"

#include "qmult/characters.hpp"
#include "qmult/hilbert.hpp"

namespace qmult {

nlohmann::json to_json(const QPolynomial& p);  // {"coeffs":[c0,c1,...]}
nlohmann::json to_json(const WeightCharacter& wc);  // [{"mult":n,"weight":[...]},...]

// {"covered":...,"dims":[...],"levi":[...],"max_degree":M,"mu":[...],
//  "terms":[{"lambda":[...],"poly":[...]}...],"type":"B3","vanishing":"..."}
nlohmann::json report_json(const RootSystem& rs, const ParabolicSubset& p, const Weight& mu,
                           const HilbertReport& report);

std::string report_text(const RootSystem& rs, const ParabolicSubset& p, const Weight& mu,
                        const HilbertReport& report);
std::string report_latex(const RootSystem& rs, const ParabolicSubset& p, const Weight& mu,
                         const HilbertReport& report);

std::string character_text(const RootSystem& rs, const Weight& lambda,
                           const WeightCharacter& wc);
std::string root_datum_text(const RootSystem& rs);
nlohmann::json root_datum_json(const RootSystem& rs);

std::string latex_poly(const QPolynomial& p);  // "q + q^{2}"

}  // namespace qmult
