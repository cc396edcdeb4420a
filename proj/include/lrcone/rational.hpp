#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <cstdint>
#include <string>
#include <vector>

namespace lrcone {

using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

inline Int rat_num(const Rat& q) { return Int(numerator(q)); }
inline Int rat_den(const Rat& q) { return Int(denominator(q)); }

// "3", "-5/7"
inline std::string rat_str(const Rat& q) {
    std::string s = rat_num(q).str();
    if (rat_den(q) != 1) s += "/" + rat_den(q).str();
    return s;
}

using QVec = std::vector<Rat>;

inline QVec qvec_from_int(const std::vector<int64_t>& v) {
    QVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
    return out;
}

}  // namespace lrcone
