#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cringlab {

class FieldError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Ground field: the rationals or a prime field GF(p).
class Field {
public:
    Field() = default;
    static Field rationals() { return Field(); }
    /// Throws FieldError unless p is a prime below 2^31.
    static Field prime(std::uint32_t p);
    /// Accepts "q", "Q", "rationals", "p:<prime>", "gf(<prime>)".
    static Field parse(std::string_view text);

    bool is_prime() const { return p_ != 0; }
    std::uint32_t characteristic() const { return p_; }
    std::string name() const;

    friend bool operator==(Field a, Field b) { return a.p_ == b.p_; }

private:
    friend class Scalar;
    explicit Field(std::uint32_t p) : p_(p) {}
    std::uint32_t p_ = 0;
};

/// Joins two fields, treating the rationals as compatible with any prime field
/// (integer constants promote). Throws FieldError for distinct primes.
Field join(Field a, Field b);

/// An exact scalar. Rationals use a 64-bit fast path with GMP fallback;
/// prime-field values are stored as residues in [0, p).
class Scalar {
public:
    Scalar() = default;
    Scalar(long long v);  // NOLINT: integer literals are scalars
    Scalar(int v) : Scalar(static_cast<long long>(v)) {}
    Scalar(long long num, long long den);
    explicit Scalar(const mpq_class& q);

    Scalar(const Scalar& other);
    Scalar(Scalar&&) noexcept = default;
    Scalar& operator=(const Scalar& other);
    Scalar& operator=(Scalar&&) noexcept = default;
    ~Scalar() = default;

    static Scalar residue(long long v, std::uint32_t p);
    /// The image of this value in f (rationals reduce modulo p).
    Scalar in(Field f) const;
    /// Parses "n", "-n", "n/d" (also accepting surrounding whitespace).
    static Scalar parse(std::string_view text, Field f);

    Field field() const;
    bool is_zero() const { return !big_ && num_ == 0; }
    bool is_one() const;
    std::string str() const;
    mpq_class to_mpq() const;

    Scalar operator-() const;
    Scalar inverse() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

private:
    static Scalar from_wide(__int128 num, __int128 den);
    static Scalar from_big(mpq_class q);
    void promote_to(std::uint32_t p);
    std::int64_t reduce_mod(std::uint32_t p) const;
    std::uint32_t common_modulus(const Scalar& o);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::uint32_t mod_ = 0;
    std::unique_ptr<mpq_class> big_;
};

}  // namespace cringlab
