#include "paramodular/euler.hpp"

#include <sstream>

namespace paramodular {

EulerFactor::EulerFactor(std::vector<RingElt> coeffs, QSpec q)
    : coeffs_(std::move(coeffs)), q_spec_(q) {
    if (coeffs_.empty() || !coeffs_[0].is_one())
        raise(ErrorCode::BadInput, "inverse Euler factor must have constant term 1");
    trim();
    if (degree() > 4)
        raise(ErrorCode::BadInput, "inverse Euler factor degree exceeds 4");
}

EulerFactor EulerFactor::linear(const RingElt& a, QSpec q) {
    return EulerFactor({RingElt::one(), -a}, q);
}

void EulerFactor::trim() {
    while (coeffs_.size() > 1 && coeffs_.back().is_zero()) coeffs_.pop_back();
}

EulerFactor EulerFactor::operator*(const EulerFactor& o) const {
    if (!(q_spec_ == o.q_spec_))
        raise(ErrorCode::BadInput, "cannot multiply Euler factors over different residue data");
    std::vector<RingElt> out(coeffs_.size() + o.coeffs_.size() - 1, RingElt::zero());
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * o.coeffs_[j];
    return EulerFactor(std::move(out), q_spec_);
}

EulerFactor EulerFactor::embed_base_change(int f) const {
    if (f < 1) raise(ErrorCode::BadInput, "residue degree must be positive");
    if (f == 1) return *this;
    std::vector<RingElt> out(static_cast<size_t>(degree()) * f + 1, RingElt::zero());
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i * f] = coeffs_[i];
    return EulerFactor(std::move(out), q_spec_);
}

EulerFactor EulerFactor::rescale_u(const RingElt& scale) const {
    std::vector<RingElt> out = coeffs_;
    RingElt power = RingElt::one();
    for (size_t i = 1; i < out.size(); ++i) {
        power = power * scale;
        out[i] = out[i] * power;
    }
    return EulerFactor(std::move(out), q_spec_);
}

EulerFactor EulerFactor::reduce_sqrt(long p) const {
    std::vector<RingElt> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.reduce_sqrt(p));
    return EulerFactor(std::move(out), QSpec::concrete(p, q_spec_.f));
}

RingElt EulerFactor::as_ring_poly(const std::string& var) const {
    RingElt out;
    for (size_t i = 0; i < coeffs_.size(); ++i)
        out += coeffs_[i] * RingElt::variable(var, static_cast<int>(i));
    return out;
}

bool EulerFactor::operator==(const EulerFactor& o) const {
    return q_spec_ == o.q_spec_ && coeffs_ == o.coeffs_;
}

std::string EulerFactor::str(const std::string& var) const {
    std::ostringstream os;
    os << "1";
    for (size_t i = 1; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        os << " + (" << coeffs_[i].str() << ")*" << var;
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

} // namespace paramodular
