#include "recmat/binom.hpp"

#include <array>

namespace recmat::binom {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

IntPolynomial IntPolynomial::one() { return IntPolynomial({mpz_class(1)}); }

const mpz_class& IntPolynomial::coeff(int k) const {
    static const mpz_class zero(0);
    if (k < 0 || k >= static_cast<int>(c_.size())) return zero;
    return c_[k];
}

IntPolynomial IntPolynomial::add(const IntPolynomial& o) const {
    std::vector<mpz_class> out(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i < c_.size()) out[i] += c_[i];
        if (i < o.c_.size()) out[i] += o.c_[i];
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::shifted(int k) const {
    if (c_.empty()) return *this;
    std::vector<mpz_class> out(c_.size() + k);
    for (std::size_t i = 0; i < c_.size(); ++i) out[i + k] = c_[i];
    return IntPolynomial(std::move(out));
}

Scalar IntPolynomial::eval(const Scalar& x) const {
    Scalar acc = Scalar::zero(x.field());
    for (std::size_t i = c_.size(); i-- > 0;) {
        acc = acc * x;
        if (sgn(c_[i]) != 0) {
            Scalar coeff = x.field().kind == FieldKind::Prime
                               ? Scalar::prime(mpz_class(c_[i] % x.field().p).get_si(),
                                               x.field())
                               : (x.field().kind == FieldKind::Gaussian
                                      ? Scalar::gaussian(mpq_class(c_[i]), 0)
                                      : Scalar::rational(mpq_class(c_[i])));
            acc = acc + coeff;
        }
    }
    return acc;
}

mpz_class IntPolynomial::eval_int(const mpz_class& x) const {
    mpz_class acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

bool IntPolynomial::palindromic() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != c_[c_.size() - 1 - i]) return false;
    return true;
}

mpz_class binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) throw OutOfRangeError("binomial requires 0 <= k <= n");
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

std::uint64_t digit_sum(std::uint64_t n, std::uint64_t base) {
    if (base < 2) throw OutOfRangeError("digit_sum requires base >= 2");
    std::uint64_t s = 0;
    while (n > 0) {
        s += n % base;
        n /= base;
    }
    return s;
}

std::int64_t lucas_mod_p(std::uint64_t n, std::uint64_t k, std::int64_t p) {
    if (!is_prime_modulus(p)) throw NotPrimeError(p);
    std::uint64_t up = static_cast<std::uint64_t>(p);
    mpz_class prod(1);
    while (n > 0 || k > 0) {
        std::uint64_t nd = n % up, kd = k % up;
        if (kd > nd) return 0;
        mpz_class d;
        mpz_bin_uiui(d.get_mpz_t(), nd, kd);
        prod = prod * d % p;
        n /= up;
        k /= up;
    }
    return prod.get_si();
}

int kummer_valuation(std::uint64_t s, std::uint64_t t, std::int64_t p) {
    if (!is_prime_modulus(p)) throw NotPrimeError(p);
    std::uint64_t up = static_cast<std::uint64_t>(p);
    int carries = 0, carry = 0;
    while (s > 0 || t > 0 || carry > 0) {
        std::uint64_t d = s % up + t % up + static_cast<std::uint64_t>(carry);
        carry = d >= up ? 1 : 0;
        carries += carry;
        s /= up;
        t /= up;
        if (s == 0 && t == 0 && carry == 0) break;
    }
    return carries;
}

mpz_class factorial_valuation(const mpz_class& x, std::int64_t p) {
    if (!is_prime_modulus(p)) throw NotPrimeError(p);
    // ds_p(x)
    mpz_class n = x, ds = 0;
    while (sgn(n) > 0) {
        ds += n % p;
        n /= p;
    }
    return (x - ds) / (p - 1);
}

int chi_B(const mpz_class& x) {
    unsigned long r = mpz_class(((x % 4) + 4) % 4).get_ui();
    if (r % 2 == 0) return 0;
    return r == 1 ? 1 : -1;
}

int chi_B(std::int64_t x) {
    std::int64_t r = ((x % 4) + 4) % 4;
    if (r % 2 == 0) return 0;
    return r == 1 ? 1 : -1;
}

int chi_J(const mpz_class& x) {
    unsigned long r = mpz_class(((x % 8) + 8) % 8).get_ui();
    if (r % 2 == 0) return 0;
    return (r == 1 || r == 7) ? 1 : -1;
}

int chi_J(std::int64_t x) {
    std::int64_t r = ((x % 8) + 8) % 8;
    if (r % 2 == 0) return 0;
    return (r == 1 || r == 7) ? 1 : -1;
}

int chi_B_binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) throw OutOfRangeError("chi_B_binomial requires 0 <= k <= n");
    // peel binary digits from the low end; the four congruence cases each
    // contribute a sign depending on the halved arguments
    int sign = 1;
    while (n > 0 || k > 0) {
        std::uint64_t nb = n & 1, kb = k & 1;
        n >>= 1;
        k >>= 1;
        if (nb == 0 && kb == 1) return 0;
        if (nb == 1 && kb == 0) {
            if (k & 1) sign = -sign;  // (-1)^k with the halved k
        } else if (nb == 1 && kb == 1) {
            if ((n & 1) && ((k + 1) & 1)) sign = -sign;  // (-1)^{n(k+1)}
        }
    }
    return sign;
}

int folding(std::uint64_t k) {
    if (k == 0) throw OutOfRangeError("folding sequence starts at 1");
    while ((k & 1) == 0) k >>= 1;
    return (k & 3) == 1 ? 1 : -1;
}

namespace {

Scalar pow3(long e) {
    mpz_class p(1);
    mpz_ui_pow_ui(p.get_mpz_t(), 3, static_cast<unsigned long>(e < 0 ? -e : e));
    return e >= 0 ? Scalar::rational(mpq_class(p)) : Scalar::rational(mpq_class(1, p));
}

}  // namespace

Scalar beeblebrox_f(std::uint64_t n) {
    long e = 0;
    for (std::uint64_t m = n; m > 1; m >>= 1) {
        // pair (nu_i, nu_{i+1}) contributes (1 - 2 nu_i) nu_{i+1}
        if (m & 2) e += (m & 1) ? -1 : 1;
    }
    Scalar v = pow3(e);
    return (n & 1) ? -v : v;
}

Scalar beeblebrox_f_recursive(std::uint64_t n) {
    if (n == 0) return Scalar::rational(1, 1);
    if (n == 1) return Scalar::rational(-1, 1);
    int a = 63 - __builtin_clzll(n);
    std::uint64_t b = n - (std::uint64_t{1} << a);
    Scalar fb = beeblebrox_f_recursive(b);
    return 2 * b < (std::uint64_t{1} << a) ? fb * Scalar::rational(3, 1)
                                           : fb * Scalar::rational(1, 3);
}

Scalar jacobi_g(std::uint64_t n) {
    static constexpr std::array<int, 8> e_table{0, 0, 1, -1, 0, -2, 3, -1};
    long e = 0;
    for (std::uint64_t m = n; m > 0; m >>= 1) e += e_table[m & 7];
    Scalar v = pow3(e);
    return (n & 1) ? -v : v;
}

IntPolynomial qbinomial_poly(std::uint64_t n, std::uint64_t k) {
    if (k > n) throw OutOfRangeError("qbinomial requires 0 <= k <= n");
    if (k > n - k) k = n - k;  // C(n,k)_q = C(n,n-k)_q
    // row-by-row recurrence, keeping one row of polynomials
    std::vector<IntPolynomial> row(k + 1);
    row[0] = IntPolynomial::one();
    for (std::uint64_t m = 1; m <= n; ++m) {
        std::uint64_t top = std::min<std::uint64_t>(k, m);
        for (std::uint64_t j = top; j >= 1; --j) {
            // C(m,j)_q = q^j C(m-1,j)_q + C(m-1,j-1)_q
            IntPolynomial left = j <= m - 1 ? row[j].shifted(static_cast<int>(j))
                                            : IntPolynomial();
            row[j] = left.add(row[j - 1]);
        }
    }
    return row[k];
}

Scalar qbinomial_eval_root(std::uint64_t a, std::uint64_t b, int n) {
    if (b > a) throw OutOfRangeError("qbinomial_eval_root requires 0 <= b <= a");
    if (n != 1 && n != 2 && n != 4) throw UnsupportedOrderError(n);
    const Field qi = Field::gaussian();
    static const auto table = [] {
        // omega-evaluated small tables for n = 1, 2, 4
        std::array<std::vector<std::vector<Scalar>>, 5> t;
        for (int ord : {1, 2, 4}) {
            Scalar omega = ord == 1   ? Scalar::one(Field::gaussian())
                           : ord == 2 ? -Scalar::one(Field::gaussian())
                                      : Scalar::gaussian(0, 1);
            std::vector<std::vector<Scalar>> tab(ord);
            for (int r = 0; r < ord; ++r)
                for (int s = 0; s < ord; ++s)
                    tab[r].push_back(s <= r ? qbinomial_poly(r, s).eval(omega)
                                            : Scalar::zero(Field::gaussian()));
            t[ord] = std::move(tab);
        }
        return t;
    }();
    std::uint64_t un = static_cast<std::uint64_t>(n);
    const Scalar& small = table[n][a % un][b % un];
    if (small.is_zero()) return Scalar::zero(qi);
    mpz_class big = binomial(a / un, b / un);
    return Scalar::gaussian(mpq_class(big), 0) * small;
}

Scalar det_formula(DetKind kind, std::uint64_t n) {
    if (n < 1) throw OutOfRangeError("det_formula requires n >= 1");
    switch (kind) {
        case DetKind::Mod2: {
            std::uint64_t m = n / 2;
            bool neg = n % 2 == 0 ? (m & 1) : ((m + digit_sum(m)) & 1);
            return Scalar::rational(neg ? -1 : 1, 1);
        }
        case DetKind::Valuation: {
            std::uint64_t m = n / 2;
            bool neg = n % 2 == 0 ? (m & 1) : ((m + digit_sum(m)) & 1);
            Scalar acc = Scalar::gaussian(neg ? -1 : 1, 0);
            std::uint64_t top = n % 2 == 0 ? 2 * m - 1 : 2 * m;
            for (std::uint64_t k = 1; k <= top && n >= 2; ++k)
                acc = acc * Scalar::gaussian(1, -folding(k));
            return acc;
        }
        case DetKind::Beeblebrox: {
            Scalar acc = Scalar::rational(1, 1);
            for (std::uint64_t k = 0; k < n; ++k) acc = acc * beeblebrox_f(k);
            return acc;
        }
        case DetKind::Jacobi: {
            Scalar acc = Scalar::rational(1, 1);
            for (std::uint64_t k = 0; k < n; ++k) acc = acc * jacobi_g(k);
            return acc;
        }
    }
    throw UnknownKindError("det_formula kind");
}

}  // namespace recmat::binom
