#include "mhc/field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace mhc {

namespace {

using ZPoly = std::vector<mpz_class>;

void trim(ZPoly& p) {
    while (p.size() > 1 && p.back() == 0) p.pop_back();
}

// Exact division of a by a monic b; throws if the remainder is nonzero.
ZPoly divide_exact(ZPoly a, const ZPoly& b) {
    trim(a);
    const std::size_t db = b.size() - 1;
    if (a.size() - 1 < db) throw std::logic_error("cyclotomic division: degree too small");
    ZPoly q(a.size() - db, 0);
    for (std::size_t k = a.size(); k-- > db;) {
        mpz_class c = a[k];
        q[k - db] = c;
        if (c == 0) continue;
        for (std::size_t i = 0; i <= db; ++i) a[k - db + i] -= c * b[i];
    }
    for (std::size_t i = 0; i < db; ++i)
        if (a[i] != 0) throw std::logic_error("cyclotomic division left a remainder");
    return q;
}

}  // namespace

unsigned euler_phi(unsigned d) {
    unsigned result = d;
    unsigned m = d;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

std::vector<mpz_class> cyclotomic_polynomial(unsigned d) {
    if (d == 0) throw std::invalid_argument("cyclotomic order must be positive");
    static std::mutex mu;
    static std::map<unsigned, ZPoly> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(d);
        if (it != cache.end()) return it->second;
    }
    ZPoly p(d + 1, 0);
    p[0] = -1;
    p[d] = 1;
    for (unsigned e = 1; e < d; ++e)
        if (d % e == 0) p = divide_exact(p, cyclotomic_polynomial(e));
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(d, p);
    return p;
}

std::string Field::name() const {
    if (kind_ == FieldKind::rationals) return "Q";
    return "Q(zeta_" + std::to_string(order_) + ")";
}

const Field* make_field(FieldKind kind, unsigned d) {
    static std::mutex mu;
    static std::map<unsigned, std::unique_ptr<Field>> interned;
    if (kind == FieldKind::rationals || d == 1) d = 1;
    if (d == 0) throw std::invalid_argument("cyclotomic order must be positive");
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = interned[d];
    if (!slot) {
        FieldKind k = d == 1 ? FieldKind::rationals : FieldKind::cyclotomic;
        slot.reset(new Field(k, d, cyclotomic_polynomial(d)));
    }
    return slot.get();
}

// ---------------------------------------------------------------- Scalar

Scalar::Scalar(const Field* f, std::vector<mpq_class> coeffs) : field_(f) {
    if (!f) field_ = rationals();
    const std::size_t deg = field_->degree();
    if (coeffs.size() > deg) {
        // reduce a longer polynomial modulo Phi_d
        const auto& mod = field_->modulus();
        for (std::size_t k = coeffs.size(); k-- > deg;) {
            mpq_class c = coeffs[k];
            if (c == 0) continue;
            for (std::size_t i = 0; i <= deg; ++i) coeffs[k - deg + i] -= c * mod[i];
        }
    }
    coeffs.resize(deg);
    if (deg == 1) {
        q_ = coeffs[0];
    } else {
        ext_ = std::move(coeffs);
    }
}

Scalar Scalar::zero(const Field* f) {
    Scalar s;
    s.field_ = f ? f : rationals();
    if (s.field_->degree() > 1) s.ext_.assign(s.field_->degree(), 0);
    return s;
}

Scalar Scalar::one(const Field* f) {
    Scalar s = zero(f);
    if (s.wide()) s.ext_[0] = 1; else s.q_ = 1;
    return s;
}

Scalar Scalar::zeta(const Field* f, long k) {
    if (!f) f = rationals();
    const long d = f->order();
    long e = ((k % d) + d) % d;
    std::vector<mpq_class> c(static_cast<std::size_t>(e) + 1, 0);
    c[static_cast<std::size_t>(e)] = 1;
    if (f->degree() == 1) {
        // d = 1: zeta = 1; d = 2: zeta = -1
        return Scalar(mpq_class(d == 2 && e == 1 ? -1 : 1));
    }
    return Scalar(f, std::move(c));
}

Scalar Scalar::parse_rational(const std::string& s) {
    mpq_class q;
    std::string t;
    for (char ch : s)
        if (ch != ' ' && ch != '+') t.push_back(ch);
    if (t.empty() || q.set_str(t, 10) != 0) throw std::invalid_argument("not a rational: '" + s + "'");
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
    q.canonicalize();
    return Scalar(q);
}

std::vector<mpq_class> Scalar::coeffs() const {
    if (wide()) return ext_;
    return {q_};
}

bool Scalar::is_zero() const {
    if (!wide()) return q_ == 0;
    for (const auto& c : ext_)
        if (c != 0) return false;
    return true;
}

bool Scalar::is_one() const {
    if (!wide()) return q_ == 1;
    if (ext_[0] != 1) return false;
    for (std::size_t i = 1; i < ext_.size(); ++i)
        if (ext_[i] != 0) return false;
    return true;
}

bool Scalar::is_rational() const {
    if (!wide()) return true;
    for (std::size_t i = 1; i < ext_.size(); ++i)
        if (ext_[i] != 0) return false;
    return true;
}

const Field* Scalar::join(const Field* a, const Field* b) {
    if (a == b) return a;
    if (a->degree() == 1) return b->degree() == 1 ? (a->order() >= b->order() ? a : b) : b;
    if (b->degree() == 1) return a;
    throw std::invalid_argument("scalars from incompatible fields " + a->name() + " and " + b->name());
}

void Scalar::widen(const Field* f) {
    field_ = f;
    if (f->degree() > 1 && !wide()) {
        ext_.assign(f->degree(), 0);
        ext_[0] = q_;
        q_ = 0;
    }
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    if (r.wide()) {
        for (auto& c : r.ext_) c = -c;
    } else {
        r.q_ = -r.q_;
    }
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    const Field* f = join(field_, o.field_);
    if (!wide() && !o.wide()) {
        q_ += o.q_;
        field_ = f;
        return *this;
    }
    widen(f);
    if (o.wide()) {
        for (std::size_t i = 0; i < ext_.size(); ++i) ext_[i] += o.ext_[i];
    } else {
        ext_[0] += o.q_;
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    const Field* f = join(field_, o.field_);
    if (!wide() && !o.wide()) {
        q_ -= o.q_;
        field_ = f;
        return *this;
    }
    widen(f);
    if (o.wide()) {
        for (std::size_t i = 0; i < ext_.size(); ++i) ext_[i] -= o.ext_[i];
    } else {
        ext_[0] -= o.q_;
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    const Field* f = join(field_, o.field_);
    if (!wide() && !o.wide()) {
        q_ *= o.q_;
        field_ = f;
        return *this;
    }
    if (!o.wide()) {
        for (auto& c : ext_) c *= o.q_;
        return *this;
    }
    if (!wide()) {
        mpq_class s = q_;
        *this = o;
        for (auto& c : ext_) c *= s;
        return *this;
    }
    const std::size_t deg = ext_.size();
    std::vector<mpq_class> prod(2 * deg - 1, 0);
    for (std::size_t i = 0; i < deg; ++i) {
        if (ext_[i] == 0) continue;
        for (std::size_t j = 0; j < deg; ++j)
            if (o.ext_[j] != 0) prod[i + j] += ext_[i] * o.ext_[j];
    }
    *this = Scalar(f, std::move(prod));
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero scalar");
    if (!wide()) {
        Scalar r = *this;
        r.q_ = 1 / q_;
        return r;
    }
    // Solve (multiplication-by-this) * y = e_0 by Gaussian elimination.
    const std::size_t deg = ext_.size();
    std::vector<std::vector<mpq_class>> m(deg, std::vector<mpq_class>(deg + 1, 0));
    for (std::size_t j = 0; j < deg; ++j) {
        std::vector<mpq_class> e(deg, 0);
        e[j] = 1;
        Scalar col = *this * Scalar(field_, e);
        for (std::size_t i = 0; i < deg; ++i) m[i][j] = col.ext_[i];
    }
    m[0][deg] = 1;
    for (std::size_t c = 0; c < deg; ++c) {
        std::size_t p = c;
        while (m[p][c] == 0) ++p;
        std::swap(m[p], m[c]);
        mpq_class inv = 1 / m[c][c];
        for (auto& v : m[c]) v *= inv;
        for (std::size_t r = 0; r < deg; ++r) {
            if (r == c || m[r][c] == 0) continue;
            mpq_class f = m[r][c];
            for (std::size_t k = c; k <= deg; ++k) m[r][k] -= f * m[c][k];
        }
    }
    std::vector<mpq_class> y(deg);
    for (std::size_t i = 0; i < deg; ++i) y[i] = m[i][deg];
    return Scalar(field_, std::move(y));
}

Scalar Scalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar base = *this;
    Scalar r = one(field_);
    while (e) {
        if (e & 1) r *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (!a.wide() && !b.wide()) return a.q_ == b.q_;
    if (a.wide() && b.wide()) {
        if (a.field_ != b.field_) return false;
        return a.ext_ == b.ext_;
    }
    const Scalar& w = a.wide() ? a : b;
    const Scalar& r = a.wide() ? b : a;
    if (w.ext_[0] != r.q_) return false;
    for (std::size_t i = 1; i < w.ext_.size(); ++i)
        if (w.ext_[i] != 0) return false;
    return true;
}

std::size_t Scalar::height() const {
    auto h = [](const mpq_class& q) {
        return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
    };
    if (!wide()) return h(q_);
    std::size_t s = 0;
    for (const auto& c : ext_) s += h(c);
    return s;
}

std::string Scalar::str() const {
    if (!wide()) return q_.get_str();
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < ext_.size(); ++i) {
        if (ext_[i] == 0) continue;
        mpq_class c = ext_[i];
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        mpq_class a = abs(c);
        if (i == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << "z" << field_->order();
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace mhc
