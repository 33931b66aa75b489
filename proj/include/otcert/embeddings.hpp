#ifndef OTCERT_EMBEDDINGS_HPP
#define OTCERT_EMBEDDINGS_HPP

#include <memory>
#include <vector>

#include "otcert/numfield.hpp"

namespace otcert {

inline constexpr long kDefaultPrecisionBits = 192;

/// s real places and t conjugate pairs of complex places; s + 2t = n.
struct Signature {
    int s = 0;
    int t = 0;
    friend bool operator==(const Signature&, const Signature&) = default;
};

Signature signature(const NumberField& field);

/// Which concrete embedding each coordinate slot uses.
///
/// By default real places follow the real roots of f in increasing order and
/// complex places follow the roots with positive imaginary part by increasing
/// argument. A convention can permute the real places and replace individual
/// complex places by their conjugates; the complex structure of the resulting
/// manifold depends on that choice.
struct PlaceConvention {
    /// real_order[i] = index (in increasing order) of the root used by place i.
    std::vector<int> real_order;
    /// conjugate[j]: complex place j uses the conjugate of the j-th upper root.
    std::vector<bool> conjugate;

    static PlaceConvention standard(Signature sig);
    bool is_standard() const;
    /// Throws std::invalid_argument when not a valid convention for sig.
    void validate(Signature sig) const;
};

/// Certified archimedean embeddings of a number field at a working precision.
/// Immutable; copies share the root data.
class EmbeddingSet {
   public:
    EmbeddingSet(NumberField field, long precision_bits = kDefaultPrecisionBits);
    EmbeddingSet(NumberField field, long precision_bits, PlaceConvention convention);

    const NumberField& field() const noexcept { return data_->field; }
    Signature signature() const noexcept { return data_->sig; }
    long precision_bits() const noexcept { return data_->precision_bits; }
    const PlaceConvention& convention() const noexcept { return convention_; }

    EmbeddingSet with_convention(PlaceConvention convention) const;
    /// Recomputes the root data at a different precision, keeping the convention.
    EmbeddingSet at_precision(long precision_bits) const;

    /// Isolating interval of the root behind real place i (0-based).
    const IsolatingInterval& real_root(int i) const;
    /// Enclosure of the root behind complex place j (0-based), convention applied.
    ComplexInterval complex_root(int j) const;

    /// sigma_i(alpha) with width <= 2^-precision_bits.
    Interval eval_real(const FieldElement& alpha, int i) const;
    /// tau_j(alpha).
    ComplexInterval eval_complex(const FieldElement& alpha, int j) const;
    /// Exact sign of sigma_i(alpha). Throws std::runtime_error if the
    /// refinement budget runs out; never guesses.
    int sign_real(const FieldElement& alpha, int i) const;

    /// The s + t coordinate values: real places, then complex places.
    std::vector<ComplexInterval> coordinates(const FieldElement& alpha) const;
    /// All n embeddings: the s + t coordinate values followed by the t
    /// conjugates of the complex places.
    std::vector<ComplexInterval> eval_all(const FieldElement& alpha) const;

    /// (log|sigma_1(u)|, ..., log|sigma_s(u)|, 2 log|tau_1(u)|, ..., 2 log|tau_t(u)|).
    /// Throws std::domain_error when some embedding of u is zero.
    std::vector<Interval> log_vector(const FieldElement& u) const;

   private:
    struct Data {
        NumberField field;
        Signature sig;
        long precision_bits = 0;
        std::vector<IsolatingInterval> real_roots;  // increasing, width <= 2^-(precision + 32)
        std::vector<ComplexRoot> upper_roots;        // Im > 0, increasing argument
    };
    EmbeddingSet(std::shared_ptr<const Data> data, PlaceConvention convention);
    static std::shared_ptr<const Data> compute(NumberField field, long precision_bits);

    Interval eval_real_at(const FieldElement& alpha, int i, long target_bits) const;

    std::shared_ptr<const Data> data_;
    PlaceConvention convention_;
};

}  // namespace otcert

#endif
