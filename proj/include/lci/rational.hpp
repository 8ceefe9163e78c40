#pragma once

#include <gmpxx.h>

#include <string>

#include "lci/errors.hpp"

namespace lci {

/// Exact rational scalar for the exact-arithmetic joint mode.
using Rat = mpq_class;

inline double scalar_to_double(const Rat& r) { return r.get_d(); }
inline double scalar_to_double(double r) { return r; }

/// Parse "3/10" or an integer literal. Decimal input is rejected: exact
/// tables must be entered as true rationals.
inline Rat rat_from_string(const std::string& text) {
    try {
        Rat r(text);
        r.canonicalize();
        if (r.get_den() == 0) throw FormatError("rational with zero denominator: " + text);
        return r;
    } catch (const std::invalid_argument&) {
        throw FormatError("not a rational literal (use p/q): " + text);
    }
}

inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

} // namespace lci
