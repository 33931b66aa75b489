#ifndef OTCERT_NUMFIELD_HPP
#define OTCERT_NUMFIELD_HPP

// The number field K = Q[X]/(f) and exact arithmetic on its elements in the
// power basis 1, theta, ..., theta^(n-1). The order used for integrality is
// Z[theta].

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "otcert/linalg.hpp"
#include "otcert/poly.hpp"

namespace otcert {

struct InvalidField : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Raised when arithmetic exposes a nontrivial factor of the defining polynomial.
struct ReducibleField : std::runtime_error {
    explicit ReducibleField(RationalPoly f)
        : std::runtime_error("defining polynomial is reducible; factor " + f.to_string()), factor(std::move(f)) {}
    RationalPoly factor;
};

struct FieldMismatch : std::invalid_argument {
    FieldMismatch() : std::invalid_argument("elements belong to different number fields") {}
};

class FieldElement;

class NumberField {
   public:
    /// Requires f monic with integer coefficients and degree >= 2; throws
    /// InvalidField otherwise or when f is provably reducible.
    explicit NumberField(RationalPoly f);

    const RationalPoly& polynomial() const noexcept { return data_->f; }
    int degree() const noexcept { return data_->n; }
    const IrreducibilityStatus& irreducibility() const noexcept { return data_->irreducibility; }

    FieldElement element(std::vector<Rational> coords) const;
    FieldElement element(std::initializer_list<long> coords) const;
    FieldElement from_rational(const Rational& q) const;
    FieldElement from_polynomial(const RationalPoly& p) const;
    FieldElement zero() const;
    FieldElement one() const;
    /// The class of X, i.e. theta.
    FieldElement generator() const;

    friend bool operator==(const NumberField& a, const NumberField& b) {
        return a.data_ == b.data_ || a.data_->f == b.data_->f;
    }

   private:
    friend class FieldElement;
    struct Data {
        RationalPoly f;
        int n = 0;
        IrreducibilityStatus irreducibility;
        // reduction[k] = coordinates of theta^(n + k), k = 0 .. n-2
        std::vector<RationalVector> reduction;
    };
    std::shared_ptr<const Data> data_;
};

class FieldElement {
   public:
    FieldElement(NumberField field, std::vector<Rational> coords);

    const NumberField& field() const noexcept { return field_; }
    const std::vector<Rational>& coords() const noexcept { return coords_; }
    RationalPoly as_polynomial() const { return RationalPoly(coords_); }

    bool is_zero() const;
    bool is_one() const;
    /// True when the element lies in Q.
    bool is_rational() const;
    bool has_integer_coords() const;

    FieldElement& operator+=(const FieldElement& o);
    FieldElement& operator-=(const FieldElement& o);
    FieldElement& operator*=(const FieldElement& o);
    FieldElement& operator*=(const Rational& c);
    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
    friend FieldElement operator*(FieldElement a, const Rational& c) { return a *= c; }
    friend FieldElement operator-(FieldElement a) { return a *= Rational(-1); }
    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.field_ == b.field_ && a.coords_ == b.coords_;
    }

    /// Throws std::domain_error for zero, ReducibleField if gcd with f is nontrivial.
    FieldElement inverse() const;
    /// Negative exponents go through inverse().
    FieldElement pow(long k) const;

    /// Column j holds the coordinates of this * theta^j.
    RationalMatrix multiplication_matrix() const;
    Rational norm() const;
    Rational trace() const;

    /// Monic least-degree rational polynomial vanishing at this element.
    RationalPoly minimal_polynomial() const;
    bool is_primitive() const { return minimal_polynomial().degree() == field_.degree(); }
    bool is_algebraic_integer() const { return minimal_polynomial().has_integer_coefficients(); }

    /// Power-basis rendering in the variable `var`, e.g. "t^2 - 1".
    std::string to_string(const std::string& var = "t") const { return as_polynomial().to_string(var); }

   private:
    void check_same_field(const FieldElement& o) const;
    NumberField field_;
    std::vector<Rational> coords_;
};

/// Q-basis (canonical echelon form) of the subalgebra Q[elements]; this is the
/// field Q(elements). Empty input yields Q.
EchelonBasis subalgebra_basis(const NumberField& field, const std::vector<FieldElement>& elements);
/// [Q(elements) : Q].
int subalgebra_degree(const std::vector<FieldElement>& elements);

}  // namespace otcert

#endif
