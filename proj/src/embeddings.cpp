#include "otcert/embeddings.hpp"

#include <algorithm>
#include <numeric>

namespace otcert {

Signature signature(const NumberField& field) {
    const int s = static_cast<int>(isolate_real_roots(field.polynomial()).size());
    return {s, (field.degree() - s) / 2};
}

PlaceConvention PlaceConvention::standard(Signature sig) {
    PlaceConvention c;
    c.real_order.resize(static_cast<std::size_t>(sig.s));
    std::iota(c.real_order.begin(), c.real_order.end(), 0);
    c.conjugate.assign(static_cast<std::size_t>(sig.t), false);
    return c;
}

bool PlaceConvention::is_standard() const {
    for (std::size_t i = 0; i < real_order.size(); ++i)
        if (real_order[i] != static_cast<int>(i)) return false;
    return std::none_of(conjugate.begin(), conjugate.end(), [](bool b) { return b; });
}

void PlaceConvention::validate(Signature sig) const {
    if (static_cast<int>(real_order.size()) != sig.s || static_cast<int>(conjugate.size()) != sig.t)
        throw std::invalid_argument("place convention does not match signature (" + std::to_string(sig.s) + ", " +
                                    std::to_string(sig.t) + ")");
    std::vector<int> sorted = real_order;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < sig.s; ++i)
        if (sorted[static_cast<std::size_t>(i)] != i) throw std::invalid_argument("real place order is not a permutation");
}

std::shared_ptr<const EmbeddingSet::Data> EmbeddingSet::compute(NumberField field, long precision_bits) {
    if (precision_bits < 64) throw std::invalid_argument("precision_bits must be at least 64");
    auto data = std::make_shared<Data>(Data{field, {}, precision_bits, {}, {}});
    const RationalPoly& f = field.polynomial();
    for (const auto& iv : isolate_real_roots(f)) data->real_roots.push_back(iv.refine(f, precision_bits + 32));
    data->sig = {static_cast<int>(data->real_roots.size()),
                 (field.degree() - static_cast<int>(data->real_roots.size())) / 2};
    if (data->sig.t > 0) {
        std::vector<ComplexRoot> all = complex_roots(f, 2 * (precision_bits + 32));
        for (std::size_t k = static_cast<std::size_t>(data->sig.s); k < all.size(); k += 2) data->upper_roots.push_back(all[k]);
    }
    return data;
}

EmbeddingSet::EmbeddingSet(NumberField field, long precision_bits)
    : data_(compute(std::move(field), precision_bits)), convention_(PlaceConvention::standard(data_->sig)) {}

EmbeddingSet::EmbeddingSet(NumberField field, long precision_bits, PlaceConvention convention)
    : data_(compute(std::move(field), precision_bits)), convention_(std::move(convention)) {
    convention_.validate(data_->sig);
}

EmbeddingSet::EmbeddingSet(std::shared_ptr<const Data> data, PlaceConvention convention)
    : data_(std::move(data)), convention_(std::move(convention)) {
    convention_.validate(data_->sig);
}

EmbeddingSet EmbeddingSet::with_convention(PlaceConvention convention) const { return EmbeddingSet(data_, std::move(convention)); }

EmbeddingSet EmbeddingSet::at_precision(long precision_bits) const {
    return EmbeddingSet(compute(data_->field, precision_bits), convention_);
}

const IsolatingInterval& EmbeddingSet::real_root(int i) const {
    if (i < 0 || i >= data_->sig.s) throw std::out_of_range("real place index out of range");
    return data_->real_roots[static_cast<std::size_t>(convention_.real_order[static_cast<std::size_t>(i)])];
}

ComplexInterval EmbeddingSet::complex_root(int j) const {
    if (j < 0 || j >= data_->sig.t) throw std::out_of_range("complex place index out of range");
    ComplexInterval z = data_->upper_roots[static_cast<std::size_t>(j)].enclosure();
    return convention_.conjugate[static_cast<std::size_t>(j)] ? z.conj() : z;
}

Interval EmbeddingSet::eval_real_at(const FieldElement& alpha, int i, long target_bits) const {
    if (!(alpha.field() == field())) throw FieldMismatch();
    const RationalPoly& f = field().polynomial();
    const RationalPoly g = alpha.as_polynomial();
    IsolatingInterval root = real_root(i);
    const BigFloat target = pow2(-target_bits, 64);
    long work = target_bits + 32;
    for (int round = 0; round < 8; ++round, work *= 2) {
        root = root.refine(f, work);
        Interval v = g(root.enclosure(work + 32));
        if (mpfr_lessequal_p(v.width().get(), target.get())) return v;
    }
    throw std::runtime_error("real embedding evaluation did not reach 2^-" + std::to_string(target_bits));
}

Interval EmbeddingSet::eval_real(const FieldElement& alpha, int i) const {
    return eval_real_at(alpha, i, data_->precision_bits);
}

ComplexInterval EmbeddingSet::eval_complex(const FieldElement& alpha, int j) const {
    if (!(alpha.field() == field())) throw FieldMismatch();
    return alpha.as_polynomial()(complex_root(j));
}

int EmbeddingSet::sign_real(const FieldElement& alpha, int i) const {
    if (alpha.is_zero()) return 0;
    const IsolatingInterval& root = real_root(i);
    RationalPoly h = gcd(alpha.as_polynomial(), field().polynomial());
    if (h.degree() > 0) {
        // f is squarefree, so h(root.hi) != 0 and (lo, hi] catches a shared root.
        auto chain = sturm_chain(h);
        if (count_real_roots(chain, root.lo, root.hi) > 0) return 0;
    }
    for (long bits = 64; bits <= 16384; bits *= 2) {
        Interval v = eval_real_at(alpha, i, bits);
        if (v.certainly_positive()) return 1;
        if (v.certainly_negative()) return -1;
    }
    throw std::runtime_error("sign refinement budget exhausted");
}

std::vector<ComplexInterval> EmbeddingSet::coordinates(const FieldElement& alpha) const {
    std::vector<ComplexInterval> out;
    for (int i = 0; i < data_->sig.s; ++i) out.push_back(ComplexInterval::real(eval_real(alpha, i)));
    for (int j = 0; j < data_->sig.t; ++j) out.push_back(eval_complex(alpha, j));
    return out;
}

std::vector<ComplexInterval> EmbeddingSet::eval_all(const FieldElement& alpha) const {
    std::vector<ComplexInterval> out = coordinates(alpha);
    for (int j = 0; j < data_->sig.t; ++j) out.push_back(out[static_cast<std::size_t>(data_->sig.s + j)].conj());
    return out;
}

std::vector<Interval> EmbeddingSet::log_vector(const FieldElement& u) const {
    if (u.is_zero()) throw std::domain_error("log_vector of zero");
    std::vector<Interval> out;
    for (int i = 0; i < data_->sig.s; ++i) {
        Interval v = eval_real(u, i);
        for (long bits = 2 * data_->precision_bits; v.contains_zero(); bits *= 2) {
            if (sign_real(u, i) == 0) throw std::domain_error("real embedding of u is zero");
            v = eval_real_at(u, i, bits);
        }
        out.push_back(v.abs().log());
    }
    for (int j = 0; j < data_->sig.t; ++j) {
        Interval n2 = eval_complex(u, j).norm();
        for (long bits = 2 * data_->precision_bits; !n2.certainly_positive(); bits *= 2) {
            if (bits > 16384) throw std::domain_error("complex embedding of u not separated from zero");
            n2 = at_precision(bits).eval_complex(u, j).norm();
        }
        out.push_back(n2.log());
    }
    return out;
}

}  // namespace otcert
