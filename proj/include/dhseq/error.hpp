#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dhseq {

// Base of every error raised by the library. CLI maps these onto exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class NotPrime : public Error {
public:
    explicit NotPrime(std::uint64_t value)
        : Error("not a prime: " + std::to_string(value)), value_(value) {}
    std::uint64_t value() const noexcept { return value_; }

private:
    std::uint64_t value_;
};

class EvenOrRepeatedPrime : public Error {
public:
    using Error::Error;
};

// Raised when gcd(phi(p_i^e_i), phi(p_j^e_j)) != 2 for some pair. Indices are
// positions in the ascending factor list.
class GcdConditionViolated : public Error {
public:
    GcdConditionViolated(std::size_t i, std::size_t j, const std::string& factor_i,
                         const std::string& factor_j, std::uint64_t gcd)
        : Error("gcd condition violated for " + factor_i + " and " + factor_j +
                ": gcd of their totients is " + std::to_string(gcd) + ", expected 2"),
          i_(i), j_(j), gcd_(gcd) {}
    std::size_t first() const noexcept { return i_; }
    std::size_t second() const noexcept { return j_; }
    std::uint64_t gcd() const noexcept { return gcd_; }

private:
    std::size_t i_, j_;
    std::uint64_t gcd_;
};

class NotPrimitiveRoot : public Error {
public:
    using Error::Error;
};

class ZeroVector : public Error {
public:
    using Error::Error;
};

class MissingDivisorVector : public Error {
public:
    explicit MissingDivisorVector(std::uint64_t d)
        : Error("no vector assigned to divisor " + std::to_string(d)), divisor_(d) {}
    std::uint64_t divisor() const noexcept { return divisor_; }

private:
    std::uint64_t divisor_;
};

class BothZero : public Error {
public:
    BothZero() : Error("gcd of two zero polynomials is undefined") {}
};

class DegreeCapExceeded : public Error {
public:
    DegreeCapExceeded(std::uint64_t degree, unsigned cap)
        : Error("extension degree " + std::to_string(degree) + " exceeds the spectral cap " +
                std::to_string(cap) + "; use the gcd or bm method instead"),
          degree_(degree), cap_(cap) {}
    std::uint64_t degree() const noexcept { return degree_; }
    unsigned cap() const noexcept { return cap_; }

private:
    std::uint64_t degree_;
    unsigned cap_;
};

class OutsideCaseTable : public Error {
public:
    using Error::Error;
};

// Two linear complexity routes returned different values.
class MethodDisagreement : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace dhseq
