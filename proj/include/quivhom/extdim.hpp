#pragma once

// Extended homological dimension values. A value is exact knowledge
// (NegInfinity for the zero module, Finite(n), Infinite with a machine
// certificate) or a verified lower bound AtLeast(c). Comparisons against
// AtLeast are three-valued; claim evaluation propagates Unknown.

#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace quivhom {

struct PathCycleCertificate {
    std::vector<std::string> cycle; // spelled paths p1 -> p2 -> ... -> p1
};

struct SyzygyPeriodicityCertificate {
    int first;  // m < n with syzygy^m isomorphic to syzygy^n
    int second;
    std::vector<int> dims; // common dimension vector of the repeating syzygy
};

using InfinityCertificate = std::variant<PathCycleCertificate, SyzygyPeriodicityCertificate>;

class ExtDim {
public:
    enum class Kind { NegInfinity, Finite, AtLeast, Infinite };

    ExtDim() : kind_(Kind::NegInfinity), value_(0) {}

    static ExtDim neg_infinity() { return ExtDim(); }
    static ExtDim finite(int n) {
        ExtDim d;
        d.kind_ = Kind::Finite;
        d.value_ = n;
        return d;
    }
    static ExtDim at_least(int cap) {
        ExtDim d;
        d.kind_ = Kind::AtLeast;
        d.value_ = cap;
        return d;
    }
    static ExtDim infinite(InfinityCertificate cert) {
        ExtDim d;
        d.kind_ = Kind::Infinite;
        d.cert_ = std::make_shared<InfinityCertificate>(std::move(cert));
        return d;
    }
    static ExtDim infinite() {
        ExtDim d;
        d.kind_ = Kind::Infinite;
        return d;
    }

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::Finite; }
    bool is_infinite() const { return kind_ == Kind::Infinite; }
    bool is_neg_infinity() const { return kind_ == Kind::NegInfinity; }
    bool is_at_least() const { return kind_ == Kind::AtLeast; }
    // fully determined = usable as hard evidence
    bool determined() const { return kind_ != Kind::AtLeast; }

    int finite_value() const {
        if (kind_ != Kind::Finite)
            throw std::logic_error("ExtDim: not finite");
        return value_;
    }
    int bound() const {
        if (kind_ != Kind::AtLeast)
            throw std::logic_error("ExtDim: not a lower bound");
        return value_;
    }
    const InfinityCertificate* certificate() const { return cert_.get(); }

    // value ignoring certificates
    bool same_value(const ExtDim& o) const {
        return kind_ == o.kind_ && (kind_ == Kind::Finite || kind_ == Kind::AtLeast ? value_ == o.value_ : true);
    }

    // knowledge interval on the scale -1 (zero module), 0, 1, ..., huge (infinity)
    std::pair<long long, long long> interval() const {
        constexpr long long inf = 1ll << 40;
        switch (kind_) {
        case Kind::NegInfinity:
            return {-1, -1};
        case Kind::Finite:
            return {value_, value_};
        case Kind::AtLeast:
            return {value_, inf};
        case Kind::Infinite:
            return {inf, inf};
        }
        return {0, 0};
    }

    // the value minus one, clamped below at NegInfinity
    ExtDim decremented() const {
        switch (kind_) {
        case Kind::NegInfinity:
            return neg_infinity();
        case Kind::Finite:
            return value_ == 0 ? neg_infinity() : finite(value_ - 1);
        case Kind::AtLeast:
            return value_ <= 0 ? at_least(0) : at_least(value_ - 1);
        case Kind::Infinite: {
            ExtDim d = *this;
            return d;
        }
        }
        return neg_infinity();
    }

    std::string str() const {
        switch (kind_) {
        case Kind::NegInfinity:
            return "-inf";
        case Kind::Finite:
            return std::to_string(value_);
        case Kind::AtLeast:
            return ">=" + std::to_string(value_);
        case Kind::Infinite:
            return "inf";
        }
        return "?";
    }

private:
    Kind kind_;
    int value_;
    std::shared_ptr<const InfinityCertificate> cert_;
};

enum class Tri { False, True, Unknown };

inline Tri tri_and(Tri a, Tri b) {
    if (a == Tri::False || b == Tri::False)
        return Tri::False;
    if (a == Tri::Unknown || b == Tri::Unknown)
        return Tri::Unknown;
    return Tri::True;
}

inline Tri tri_eq(const ExtDim& a, const ExtDim& b) {
    auto [alo, ahi] = a.interval();
    auto [blo, bhi] = b.interval();
    if (ahi < blo || bhi < alo)
        return Tri::False;
    if (alo == ahi && blo == bhi)
        return Tri::True;
    return Tri::Unknown;
}

inline Tri tri_le(const ExtDim& a, const ExtDim& b) {
    auto [alo, ahi] = a.interval();
    auto [blo, bhi] = b.interval();
    if (ahi <= blo)
        return Tri::True;
    if (alo > bhi)
        return Tri::False;
    return Tri::Unknown;
}

inline Tri tri_ge(const ExtDim& a, const ExtDim& b) { return tri_le(b, a); }

// knowledge of max(a, b): join of the intervals
inline ExtDim extdim_max(const ExtDim& a, const ExtDim& b) {
    constexpr long long inf = 1ll << 40;
    auto [alo, ahi] = a.interval();
    auto [blo, bhi] = b.interval();
    long long lo = std::max(alo, blo), hi = std::max(ahi, bhi);
    if (lo == hi) {
        if (lo == -1)
            return ExtDim::neg_infinity();
        if (lo == inf)
            return a.is_infinite() ? a : b; // keep whichever certificate exists
        return ExtDim::finite((int)lo);
    }
    return ExtDim::at_least((int)std::max(lo, 0ll));
}

} // namespace quivhom
