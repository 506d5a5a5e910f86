#pragma once
// Machine-readable exports: CSV tables with a header row, JSON arrays of
// flat records.

#include <ostream>
#include <span>

#include "json.hpp"
#include "rlsg/asymptotics.hpp"
#include "rlsg/laws.hpp"
#include "rlsg/spectral.hpp"

namespace rlsg::report {

using Json = nlohmann::ordered_json;

/// "n,s_n" then one row per singular value, n starting at 1.
void write_spectrum_csv(std::ostream& os, const SingularSpectrum& s);

/// "n,exact_re,exact_im,asymptote_re,asymptote_im,ratio_abs"
void write_diagonal_csv(std::ostream& os, std::span<const DiagonalReport> rows);

Json to_json(const SchattenVerdict& v);
Json to_json(const BoundReport& b);
Json to_json(const InterpolationReport& r, const InterpolationSpec& spec);

/// Exponent as a JSON value; infinity becomes the string "inf".
Json exponent(double p);

}  // namespace rlsg::report
