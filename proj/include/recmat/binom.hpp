#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "recmat/scalar.hpp"

namespace recmat::binom {

/// Integer polynomial, ascending coefficients, trailing zeros stripped.
/// Houses q-binomial coefficients.
class IntPolynomial {
  public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<mpz_class> coeffs);
    static IntPolynomial one();

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const std::vector<mpz_class>& coeffs() const { return c_; }
    const mpz_class& coeff(int k) const;

    IntPolynomial add(const IntPolynomial& o) const;
    /// q^k * this
    IntPolynomial shifted(int k) const;
    Scalar eval(const Scalar& x) const;
    mpz_class eval_int(const mpz_class& x) const;
    bool palindromic() const;

    bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }

  private:
    std::vector<mpz_class> c_;
};

/// Exact C(n, k); OutOfRangeError unless 0 <= k <= n.
mpz_class binomial(std::uint64_t n, std::uint64_t k);

/// Sum of base-b digits.
std::uint64_t digit_sum(std::uint64_t n, std::uint64_t base = 2);

/// C(n, k) mod p by Lucas' digit product; NotPrimeError when p is not prime.
std::int64_t lucas_mod_p(std::uint64_t n, std::uint64_t k, std::int64_t p);

/// v_p(C(s+t, s)) = number of carries when adding s and t in base p (Kummer).
int kummer_valuation(std::uint64_t s, std::uint64_t t, std::int64_t p);

/// v_p(x!) via the digit-sum identity (x - ds_p(x)) / (p - 1).
mpz_class factorial_valuation(const mpz_class& x, std::int64_t p);

/// Dirichlet character mod 4: 0 on evens, +1 on 1 mod 4, -1 on 3 mod 4.
int chi_B(const mpz_class& x);
int chi_B(std::int64_t x);

/// Dirichlet character mod 8: 0 on evens, +1 on +-1, -1 on +-3 mod 8.
int chi_J(const mpz_class& x);
int chi_J(std::int64_t x);

/// chi_B(C(n,k)) in O(log n) via the parity-case recursion; never forms the
/// binomial coefficient.
int chi_B_binomial(std::uint64_t n, std::uint64_t k);

/// Regular paperfolding sequence, f(2^n) = 1, f(2^n + a) = -f(2^n - a).
int folding(std::uint64_t k);

/// The +-3^Z sequence with f(2^a + b) = 3 f(b) or f(b)/3; diagonal of the
/// Beeblebrox D factor. Closed form (Bartholdi's bit-pair product).
Scalar beeblebrox_f(std::uint64_t n);
/// Same value by the paper's recursion; the two must agree.
Scalar beeblebrox_f_recursive(std::uint64_t n);

/// g(n) = (-1)^n prod_k 3^{e(floor(n / 2^k))} with the 8-periodic e-table.
Scalar jacobi_g(std::uint64_t n);

/// q-binomial C(n,k)_q via C(n,k)_q = q^k C(n-1,k)_q + C(n-1,k-1)_q.
IntPolynomial qbinomial_poly(std::uint64_t n, std::uint64_t k);

/// C(a,b) at a primitive n-th root of unity, n in {1,2,4} (omega = 1,-1,i):
/// ordinary binomial of the digit quotients times a small table factor.
Scalar qbinomial_eval_root(std::uint64_t a, std::uint64_t b, int n);

enum class DetKind { Mod2, Valuation, Beeblebrox, Jacobi };

/// Closed-form determinant of the n x n character matrix.
Scalar det_formula(DetKind kind, std::uint64_t n);

}  // namespace recmat::binom
