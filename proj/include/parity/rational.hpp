#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace paritygroups {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Floor of an exact rational (rounds toward -infinity).
inline Int rat_floor(const Rat& x)
{
    Int num = boost::multiprecision::numerator(x);
    Int den = boost::multiprecision::denominator(x);   // den > 0 by canonical form
    Int q = num / den;
    if (num < 0 && q * den != num)
        --q;
    return q;
}

/// Canonical residue of x modulo k, in [0, k).
///
/// This is the congruence-class representative: it makes x -> (x mod k) a
/// homomorphism R -> R/kZ even for negative x, which absolute value followed
/// by reduction would not.
inline Rat rat_mod(const Rat& x, int k)
{
    Rat q(rat_floor(x / k));
    return x - q * k;
}

inline Int int_mod(const Int& x, int k)
{
    Int r = x % k;
    if (r < 0)
        r += k;
    return r;
}

inline std::string rat_str(const Rat& x)
{
    Int num = boost::multiprecision::numerator(x);
    Int den = boost::multiprecision::denominator(x);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

/// Parses "p/q" or a plain integer literal.
inline Rat rat_parse(const std::string& text)
{
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos)
            return Rat(Int(text));
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (den == 0)
            throw std::invalid_argument("zero denominator");
        return Rat(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("invalid rational literal: \"" + text + "\"");
    }
}

} // namespace paritygroups
