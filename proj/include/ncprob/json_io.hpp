#ifndef NCPROB_JSON_IO_HPP
#define NCPROB_JSON_IO_HPP

#include <json.hpp>
#include <string>

#include "ncprob/diagonal.hpp"
#include "ncprob/series.hpp"
#include "ncprob/transforms.hpp"

namespace ncprob {

using Json = nlohmann::ordered_json;

// Coefficients serialize as "p/q" strings when real and as
// {"re":"p/q","im":"p/q"} objects otherwise; both forms are accepted on
// input. Rationals are bit-exact round trips.
Json coeff_to_json(const Coeff& c);
Coeff coeff_from_json(const Json& j);

/// {"kind":"nc2","order":N,"coeffs":{"1*":"1/2",...}} with words as keys.
Json ncseries_to_json(const NcSeries& f);
NcSeries ncseries_from_json(const Json& j);

/// {"kind":"ps1","order":N,"coeffs":{"1":"1/2",...}} with degrees as keys.
Json powerseries_to_json(const PowerSeries& f);
PowerSeries powerseries_from_json(const Json& j);

/// {"atoms":[["0","1/2"],["2","1/2"]]}.
Json measure_to_json(const AtomicMeasure& m);
AtomicMeasure measure_from_json(const Json& j);

/// {"alpha":[...],"beta":[...]} with 1-based sequences listed from n=1.
Json pair_to_json(const DeterminingPair& d);
DeterminingPair pair_from_json(const Json& j);

/// Accepts a literal JSON string or @path-to-file.
Json load_json_argument(const std::string& arg);

}  // namespace ncprob

#endif
