#include "cringlab/scalar.hpp"

#include <cctype>
#include <limits>

namespace cringlab {

namespace {

using u128 = unsigned __int128;

u128 gcd128(u128 a, u128 b)
{
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

u128 abs128(__int128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

bool fits64(__int128 v)
{
    return v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max();
}

mpz_class mpz_from(__int128 v)
{
    bool neg = v < 0;
    u128 u = abs128(v);
    mpz_class hi(static_cast<unsigned long>(u >> 64));
    mpz_class lo(static_cast<unsigned long>(u & 0xFFFFFFFFFFFFFFFFULL));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t p)
{
    std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
    if (new_r < 0) new_r += p;
    if (new_r == 0) throw FieldError("division by zero in GF(" + std::to_string(p) + ")");
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    return t < 0 ? t + p : t;
}

bool prime_number(std::uint64_t p)
{
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool is_integer_text(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Field Field::prime(std::uint32_t p)
{
    if (p >= (1U << 31) || !prime_number(p))
        throw FieldError("not a supported prime: " + std::to_string(p));
    return Field(p);
}

Field Field::parse(std::string_view text)
{
    std::string s(trim(text));
    for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (s == "q" || s == "rationals" || s == "qq") return rationals();
    std::string digits;
    if (s.rfind("p:", 0) == 0)
        digits = s.substr(2);
    else if (s.rfind("gf(", 0) == 0 && s.back() == ')')
        digits = s.substr(3, s.size() - 4);
    else if (s.rfind("gf", 0) == 0)
        digits = s.substr(2);
    if (digits.empty() || !is_integer_text(digits) || digits.front() == '-' || digits.size() > 10)
        throw FieldError("unrecognised field: " + std::string(text));
    return prime(static_cast<std::uint32_t>(std::stoull(digits)));
}

std::string Field::name() const { return p_ == 0 ? "Q" : "GF(" + std::to_string(p_) + ")"; }

Field join(Field a, Field b)
{
    if (a == b || !b.is_prime()) return a;
    if (!a.is_prime()) return b;
    throw FieldError("mixing " + a.name() + " with " + b.name());
}

Scalar::Scalar(long long v) : num_(v) {}

Scalar::Scalar(long long num, long long den)
{
    if (den == 0) throw FieldError("zero denominator");
    *this = from_wide(num, den);
}

Scalar::Scalar(const mpq_class& q) { *this = from_big(q); }

Scalar::Scalar(const Scalar& o)
    : num_(o.num_), den_(o.den_), mod_(o.mod_), big_(o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr)
{
}

Scalar& Scalar::operator=(const Scalar& o)
{
    if (this != &o) {
        num_ = o.num_;
        den_ = o.den_;
        mod_ = o.mod_;
        big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
    }
    return *this;
}

Scalar Scalar::residue(long long v, std::uint32_t p)
{
    Scalar s;
    long long r = v % static_cast<long long>(p);
    s.num_ = r < 0 ? r + p : r;
    s.mod_ = p;
    return s;
}

Scalar Scalar::from_wide(__int128 num, __int128 den)
{
    if (den < 0) {
        num = -num;
        den = -den;
    }
    u128 g = gcd128(abs128(num), static_cast<u128>(den));
    if (g > 1) {
        num /= static_cast<__int128>(g);
        den /= static_cast<__int128>(g);
    }
    Scalar s;
    if (fits64(num) && fits64(den)) {
        s.num_ = static_cast<std::int64_t>(num);
        s.den_ = static_cast<std::int64_t>(den);
        return s;
    }
    mpq_class q(mpz_from(num), mpz_from(den));
    q.canonicalize();
    s.big_ = std::make_unique<mpq_class>(std::move(q));
    s.num_ = 1;
    return s;
}

Scalar Scalar::from_big(mpq_class q)
{
    q.canonicalize();
    Scalar s;
    if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
        s.num_ = q.get_num().get_si();
        s.den_ = q.get_den().get_si();
        return s;
    }
    s.big_ = std::make_unique<mpq_class>(std::move(q));
    s.num_ = 1;
    return s;
}

Scalar Scalar::in(Field f) const
{
    if (!f.is_prime()) {
        if (mod_ != 0) throw FieldError("cannot lift a residue to Q");
        return *this;
    }
    std::uint32_t p = f.characteristic();
    if (mod_ == p) return *this;
    if (mod_ != 0) throw FieldError("mixing GF(" + std::to_string(mod_) + ") with GF(" + std::to_string(p) + ")");
    return residue(reduce_mod(p), p);
}

std::int64_t Scalar::reduce_mod(std::uint32_t p) const
{
    if (mod_ == p) return num_;
    std::int64_t n = 0, d = 0;
    if (big_) {
        n = static_cast<std::int64_t>(mpz_fdiv_ui(big_->get_num_mpz_t(), p));
        d = static_cast<std::int64_t>(mpz_fdiv_ui(big_->get_den_mpz_t(), p));
    } else {
        n = num_ % static_cast<std::int64_t>(p);
        if (n < 0) n += p;
        d = den_ % static_cast<std::int64_t>(p);
    }
    if (d == 0) throw FieldError("denominator vanishes in GF(" + std::to_string(p) + ")");
    return static_cast<std::int64_t>((static_cast<__int128>(n) * inverse_mod(d, p)) % p);
}

Scalar Scalar::parse(std::string_view text, Field f)
{
    std::string_view t = trim(text);
    auto slash = t.find('/');
    std::string_view num_text = trim(t.substr(0, slash));
    std::string_view den_text = slash == std::string_view::npos ? std::string_view("1") : trim(t.substr(slash + 1));
    if (!is_integer_text(num_text) || !is_integer_text(den_text))
        throw FieldError("malformed scalar '" + std::string(text) + "'");
    if (num_text.front() == '+') num_text.remove_prefix(1);
    if (den_text.front() == '+') den_text.remove_prefix(1);
    mpz_class n{std::string(num_text)};
    mpz_class d{std::string(den_text)};
    if (d == 0) throw FieldError("zero denominator in '" + std::string(text) + "'");
    return Scalar(mpq_class(n, d)).in(f);
}

Field Scalar::field() const { return mod_ == 0 ? Field::rationals() : Field(mod_); }

bool Scalar::is_one() const { return !big_ && num_ == 1 && den_ == 1; }

std::string Scalar::str() const
{
    if (big_) return big_->get_str();
    if (mod_ != 0 || den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

mpq_class Scalar::to_mpq() const
{
    if (big_) return *big_;
    mpq_class q{mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_))};
    q.canonicalize();
    return q;
}

void Scalar::promote_to(std::uint32_t p) { *this = residue(reduce_mod(p), p); }

std::uint32_t Scalar::common_modulus(const Scalar& o)
{
    if (mod_ == o.mod_) return mod_;
    if (mod_ != 0 && o.mod_ != 0)
        throw FieldError("mixing GF(" + std::to_string(mod_) + ") with GF(" + std::to_string(o.mod_) + ")");
    if (mod_ == 0) promote_to(o.mod_);
    return mod_;
}

Scalar Scalar::operator-() const
{
    Scalar r(*this);
    if (mod_ != 0) {
        r.num_ = num_ == 0 ? 0 : mod_ - num_;
    } else if (big_) {
        *r.big_ = -*big_;
    } else if (num_ == std::numeric_limits<std::int64_t>::min()) {
        r = from_wide(-static_cast<__int128>(num_), den_);
    } else {
        r.num_ = -num_;
    }
    return r;
}

Scalar Scalar::inverse() const
{
    if (is_zero()) throw FieldError("division by zero");
    if (mod_ != 0) {
        Scalar r;
        r.mod_ = mod_;
        r.num_ = inverse_mod(num_, mod_);
        return r;
    }
    if (big_) return from_big(1 / *big_);
    return from_wide(den_, num_);
}

Scalar& Scalar::operator+=(const Scalar& o)
{
    if (mod_ != 0 || o.mod_ != 0) {
        std::uint32_t p = common_modulus(o);
        std::int64_t r = o.reduce_mod(p);
        num_ = (num_ + r) % p;
        return *this;
    }
    if (!big_ && !o.big_) {
        if (den_ == 1 && o.den_ == 1) {
            std::int64_t out = 0;
            if (!__builtin_add_overflow(num_, o.num_, &out)) {
                num_ = out;
                return *this;
            }
        }
        *this = from_wide(static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_,
                          static_cast<__int128>(den_) * o.den_);
        return *this;
    }
    *this = from_big(to_mpq() + o.to_mpq());
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o)
{
    if (mod_ != 0 || o.mod_ != 0) {
        std::uint32_t p = common_modulus(o);
        std::int64_t r = o.reduce_mod(p);
        num_ = static_cast<std::int64_t>((static_cast<__int128>(num_) * r) % p);
        return *this;
    }
    if (!big_ && !o.big_) {
        if (den_ == 1 && o.den_ == 1) {
            std::int64_t out = 0;
            if (!__builtin_mul_overflow(num_, o.num_, &out)) {
                num_ = out;
                return *this;
            }
        }
        *this = from_wide(static_cast<__int128>(num_) * o.num_, static_cast<__int128>(den_) * o.den_);
        return *this;
    }
    *this = from_big(to_mpq() * o.to_mpq());
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

bool operator==(const Scalar& a, const Scalar& b)
{
    if (a.mod_ != 0 || b.mod_ != 0) {
        std::uint32_t p = a.mod_ != 0 ? a.mod_ : b.mod_;
        if (a.mod_ != 0 && b.mod_ != 0 && a.mod_ != b.mod_) return false;
        std::int64_t ra = a.reduce_mod(p);
        std::int64_t rb = b.reduce_mod(p);
        return ra == rb;
    }
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    return a.to_mpq() == b.to_mpq();
}

}  // namespace cringlab
