#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace dgla {

// Exact arbitrary-precision rational scalar. cpp_rational keeps values in
// lowest terms with positive denominator, which is exactly the invariant the
// rest of the library relies on: no rounding anywhere, ever.
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};
struct StructuralError : Error {
    explicit StructuralError(const std::string& msg) : Error(msg) {}
};
struct NotChainMap : Error {
    explicit NotChainMap(const std::string& msg) : Error(msg) {}
};
struct NotInjective : Error {
    explicit NotInjective(const std::string& msg) : Error(msg) {}
};
struct TruncationExceeded : Error {
    explicit TruncationExceeded(const std::string& msg) : Error(msg) {}
};
struct SeedNotCocycle : Error {
    explicit SeedNotCocycle(const std::string& msg) : Error(msg) {}
};
struct PresheafViolation : Error {
    explicit PresheafViolation(const std::string& msg) : Error(msg) {}
};
struct LevelNotDegreeZero : Error {
    explicit LevelNotDegreeZero(const std::string& msg) : Error(msg) {}
};
struct FiltrationNotPreserved : Error {
    explicit FiltrationNotPreserved(const std::string& msg) : Error(msg) {}
};
struct LieDerivativeEscapesN : Error {
    explicit LieDerivativeEscapesN(const std::string& msg) : Error(msg) {}
};
struct NotBigraded : Error {
    explicit NotBigraded(const std::string& msg) : Error(msg) {}
};
struct AxiomError : Error {
    explicit AxiomError(const std::string& msg) : Error(msg) {}
};

inline Rat rat(long long num, long long den = 1) {
    if (den == 0) throw StructuralError("rational with zero denominator");
    if (den < 0) { num = -num; den = -den; }  // cpp_rational wants den > 0
    return Rat(num, den);
}

// Parses "p", "-p", "p/q". Used by the instance loader; rationals travel as
// strings so no float path ever exists.
inline Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw StructuralError("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw StructuralError("rational with zero denominator: " + s);
        if (den < 0) { num = -num; den = -den; }
        return Rat(num, den);
    } catch (const StructuralError&) {
        throw;
    } catch (const std::runtime_error&) {
        throw StructuralError("bad rational literal: " + s);
    }
}

inline std::string rat_to_string(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Rat factorial(int n) {
    Rat r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

}  // namespace dgla
