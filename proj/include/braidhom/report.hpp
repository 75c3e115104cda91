#ifndef BRAIDHOM_REPORT_HPP
#define BRAIDHOM_REPORT_HPP

#include <string>
#include <vector>

#include "braidhom/chords.hpp"
#include "braidhom/complex.hpp"
#include "braidhom/invariant.hpp"
#include "braidhom/morse.hpp"

namespace braidhom {

// Plain-text report documents with a versioned header line; schemas in
// docs/formats.md. All renderers are deterministic byte-for-byte.

std::string render_chords_report(const SurfaceSpec& spec, double cutoff,
                                 const std::vector<Chord>& chords);

std::string render_morse_report(const MorseParams& params, const std::vector<CriticalPoint>& cps,
                                const std::vector<Trajectory>& trajectories);

std::string render_complex_report(const TrianglePackage& t, bool mod2);

std::string render_triangle_report(long long k, const TrianglePackage& t,
                                   const ExactnessReport& ex);

std::string render_distinguish_report(long long k, long long kprime, const Verdict& v);

std::string render_error_report(const std::string& code, const std::string& message);

}  // namespace braidhom

#endif
