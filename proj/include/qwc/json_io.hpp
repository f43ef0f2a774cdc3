#pragma once

#include <optional>

#include <json.hpp>

#include "qwc/algebraic.hpp"
#include "qwc/corona_spectra.hpp"
#include "qwc/spectra.hpp"
#include "qwc/state_transfer.hpp"

namespace qwc {

using Json = nlohmann::ordered_json;

// x rounded to 12 significant digits, tiny values (< 1e-12) to 0, so
// serialized output is stable.
double round12(double x);
Json number(double x);

// {"a","b","delta"}.
Json to_json(const QuadExt& x);
// Exact form when known, otherwise {"approx": x}.
Json quad_or_approx(const std::optional<QuadExt>& exact, double x);

// Eigenvalues (recognized where possible), multiplicities, optional projectors.
Json to_json(const SpectralDecomposition& dec, const RecognitionOptions& recog,
             bool with_projectors);
Json to_json(const CoronaSpectrum& spectrum, bool with_projectors);
Json to_json(const PeriodicityReport& report);
Json to_json(const K2Analysis& analysis);
Json to_json(const PSTReport& report);
Json to_json(const PGSTSearchResult& result);

}  // namespace qwc
