#ifndef NLF_COVER_HPP
#define NLF_COVER_HPP

// Curves on the non-orientable fiber N_g, modeled through their two lifts to
// the orientation double cover Sigma_{g-1}. A two-sided curve c is stored as
// one lift gamma; the other lift is J gamma. The orientation tag theta picks
// which of the two is "the" lift gamma in t_{c; theta}.
//
// Equality of curves here means equality of lift data. Distinct isotopy
// classes with the same homology lifts are indistinguishable.

#include <nlf/error.hpp>
#include <nlf/homology.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace nlf {

using CurveIndex = std::uint32_t;

enum class Theta : std::int8_t { plus = 1, minus = -1 };

constexpr Theta operator-(Theta t) noexcept { return t == Theta::plus ? Theta::minus : Theta::plus; }
constexpr char to_char(Theta t) noexcept { return t == Theta::plus ? '+' : '-'; }

struct TwoSidedCurve {
    std::string id;
    HClass lift;    // gamma; first nonzero coefficient positive. Zero for null markers.
    HClass partner; // J gamma
    std::string null_tag;
    std::string display;

    bool is_null() const noexcept { return !null_tag.empty(); }
    /// J gamma = +-gamma: the two lifts coincide in homology.
    bool degenerate() const { return !is_null() && (partner == lift || partner == -lift); }
};

struct OrientedCurve {
    CurveIndex curve = 0;
    Theta theta = Theta::plus;

    friend bool operator==(const OrientedCurve&, const OrientedCurve&) = default;
    friend auto operator<=>(const OrientedCurve&, const OrientedCurve&) = default;
};

/// Curves of one fiber N_g together with the declared disjoint pairs.
///
/// The dictionary is append-only: indices handed out stay valid, and pushing
/// curves forward under a mapping class may register new, auto-named curves.
class CurveDictionary {
public:
    /// One registered name. Several names may refer to the same curve; `swapped`
    /// records that the name was declared with the other lift as gamma.
    struct Name {
        std::string id;
        CurveIndex curve = 0;
        bool swapped = false;
        HClass declared; // lift exactly as declared, after sign canonicalization
    };

    explicit CurveDictionary(int genus) : genus_(genus), deck_(deck_involution(genus >= 1 ? genus - 1 : 0)) {
        if (genus < 1) throw InvariantError("non-orientable genus must be at least 1");
    }

    int genus() const noexcept { return genus_; }
    int cover_genus() const noexcept { return genus_ - 1; }
    Lattice lattice() const noexcept { return Lattice{cover_genus()}; }
    std::size_t rank() const noexcept { return lattice().rank(); }
    const DeckInvolution& deck() const noexcept { return deck_; }

    std::size_t size() const noexcept { return curves_.size(); }
    const TwoSidedCurve& curve(CurveIndex i) const { return curves_.at(i); }
    const std::vector<TwoSidedCurve>& curves() const noexcept { return curves_; }
    const std::vector<Name>& names() const noexcept { return names_; }
    const std::vector<std::string>& warnings() const noexcept { return warnings_; }

    /// Registers `id` with lift `gamma`. Re-declaring an id with the same lift is a
    /// no-op; a new id whose lift pair matches an existing curve becomes an alias.
    CurveIndex register_curve(std::string id, const HClass& gamma, std::string display = {}) {
        if (gamma.size() != rank())
            throw DimensionError("curve '" + id + "' has " + std::to_string(gamma.size()) +
                                 " coefficients, expected " + std::to_string(rank()));
        if (gamma.is_zero())
            throw InvariantError("curve '" + id + "': zero lift; declare null-homologous curves with a null marker");
        if (!gamma.is_primitive()) throw InvariantError("curve '" + id + "': non-primitive lift class");
        const HClass other = deck_(gamma);
        if (pairing(gamma, other) != 0)
            throw InvariantError("curve '" + id + "': <gamma, J gamma> = " + pairing(gamma, other).str() +
                                 " != 0, so its lifts are not disjoint");
        const HClass canon = gamma.canonical();
        if (auto existing = by_name_.find(id); existing != by_name_.end()) {
            if (names_[existing->second].declared == canon) return names_[existing->second].curve;
            throw InvariantError("duplicate curve id '" + id + "'");
        }
        const std::string key = class_key(canon);
        if (auto it = by_class_.find(key); it != by_class_.end()) {
            const bool swapped = curves_[it->second].lift != canon;
            add_name(std::move(id), it->second, swapped, canon);
            return it->second;
        }
        // The stored lift is the smaller canonical class of the pair, so the stored
        // data does not depend on which lift was declared.
        const HClass partner = other.canonical();
        const HClass& stored = partner < canon ? partner : canon;
        TwoSidedCurve c{id, stored, deck_(stored), {}, std::move(display)};
        if (c.degenerate())
            warnings_.push_back("curve '" + id + "': J gamma = +-gamma, its lifted twist pair acts trivially on homology");
        return add_curve(std::move(c), key, stored != canon, canon);
    }

    /// Registers a null-homologous two-sided curve, identified by an opaque tag.
    /// Its twists are tracked symbolically and act trivially on homology.
    CurveIndex register_null_curve(std::string id, std::string tag) {
        if (tag.empty()) throw InvariantError("null curve '" + id + "' needs a tag");
        const HClass zero(rank());
        if (auto existing = by_name_.find(id); existing != by_name_.end()) {
            const auto& c = curves_[names_[existing->second].curve];
            if (c.null_tag == tag) return names_[existing->second].curve;
            throw InvariantError("duplicate curve id '" + id + "'");
        }
        const std::string key = "null:" + tag;
        if (auto it = by_class_.find(key); it != by_class_.end()) {
            add_name(std::move(id), it->second, false, zero);
            return it->second;
        }
        return add_curve(TwoSidedCurve{id, zero, zero, std::move(tag), {}}, key, false, zero);
    }

    std::optional<Name> find(std::string_view id) const {
        auto it = by_name_.find(std::string(id));
        if (it == by_name_.end()) return std::nullopt;
        return names_[it->second];
    }

    const Name& name(std::string_view id) const {
        auto it = by_name_.find(std::string(id));
        if (it == by_name_.end()) throw InvariantError("unknown curve '" + std::string(id) + "'");
        return names_[it->second];
    }

    /// The oriented curve meant by `id` with tag `theta`, accounting for aliases
    /// that were declared with the other lift.
    OrientedCurve oriented(std::string_view id, Theta theta) const {
        const Name& n = name(id);
        return {n.curve, n.swapped ? -theta : theta};
    }

    /// Theta as written with the curve's primary name (the id in TwoSidedCurve).
    Theta written_theta(OrientedCurve oc) const {
        const Name& n = name(curve(oc.curve).id);
        return n.swapped ? -oc.theta : oc.theta;
    }

    /// The registered curve having `v` (up to sign) as one of its lifts, oriented so
    /// that `v` is the selected lift.
    std::optional<OrientedCurve> find_lift(const HClass& v) const {
        if (v.size() != rank() || v.is_zero()) return std::nullopt;
        auto it = by_class_.find(class_key(v));
        if (it == by_class_.end()) return std::nullopt;
        const auto& c = curves_[it->second];
        return OrientedCurve{it->second, v.canonical() == c.lift ? Theta::plus : Theta::minus};
    }

    std::optional<CurveIndex> find_null(std::string_view tag) const {
        auto it = by_class_.find("null:" + std::string(tag));
        if (it == by_class_.end()) return std::nullopt;
        return it->second;
    }

    void declare_disjoint(std::string_view a, std::string_view b) {
        declare_disjoint(name(a).curve, name(b).curve);
    }

    void declare_disjoint(CurveIndex a, CurveIndex b) {
        const auto& ca = curve(a);
        const auto& cb = curve(b);
        if (a == b) throw InvariantError("curve '" + ca.id + "' cannot be declared disjoint from itself");
        for (const HClass* x : {&ca.lift, &ca.partner}) {
            for (const HClass* y : {&cb.lift, &cb.partner}) {
                if (pairing(*x, *y) != 0)
                    throw InvariantError("curves '" + ca.id + "' and '" + cb.id +
                                         "' declared disjoint but their lifts pair to " + pairing(*x, *y).str());
            }
        }
        disjoint_.insert(std::minmax(a, b));
    }

    /// Whether twists about `a` and `b` may be commuted: same curve or declared disjoint.
    bool disjoint(CurveIndex a, CurveIndex b) const { return disjoint_.contains(std::minmax(a, b)); }

    const std::set<std::pair<CurveIndex, CurveIndex>>& disjoint_pairs() const noexcept { return disjoint_; }

    /// Key identifying the unordered lift pair {+-v, +-Jv}.
    std::string class_key(const HClass& v) const {
        const HClass x = v.canonical();
        const HClass y = deck_(v).canonical();
        return (y < x ? y : x).to_string();
    }

    /// Name used for curves registered by push-forward, derived from the lift pair.
    std::string auto_name(const HClass& v) const {
        const HClass x = v.canonical();
        const HClass y = deck_(v).canonical();
        const HClass& rep = y < x ? y : x;
        std::string s = "auto";
        for (const auto& c : rep.coeffs()) s += "_" + (c < 0 ? "m" + Integer(-c).str() : c.str());
        return s;
    }

    /// Curve with selected lift `v`, registering an auto-named curve if needed.
    OrientedCurve lookup_or_register(const HClass& v) {
        if (auto found = find_lift(v)) return *found;
        const HClass x = v.canonical();
        const HClass y = deck_(v).canonical();
        const HClass& stored = y < x ? y : x;
        const std::string id = auto_name(v);
        if (by_name_.contains(id)) throw InvariantError("auto-generated curve name '" + id + "' is already taken");
        const CurveIndex idx = register_curve(id, stored);
        return {idx, x == curve(idx).lift ? Theta::plus : Theta::minus};
    }

private:
    CurveIndex add_curve(TwoSidedCurve c, const std::string& key, bool swapped, HClass declared) {
        const auto idx = static_cast<CurveIndex>(curves_.size());
        std::string id = c.id;
        curves_.push_back(std::move(c));
        by_class_.emplace(key, idx);
        add_name(std::move(id), idx, swapped, std::move(declared));
        return idx;
    }

    void add_name(std::string id, CurveIndex idx, bool swapped, HClass declared) {
        by_name_.emplace(id, names_.size());
        names_.push_back(Name{std::move(id), idx, swapped, std::move(declared)});
    }

    int genus_;
    DeckInvolution deck_;
    std::vector<TwoSidedCurve> curves_;
    std::vector<Name> names_;
    std::unordered_map<std::string, std::size_t> by_name_;
    std::unordered_map<std::string, CurveIndex> by_class_;
    std::set<std::pair<CurveIndex, CurveIndex>> disjoint_;
    std::vector<std::string> warnings_;
};

/// (selected lift, its J-image): (gamma, J gamma) for theta = +, (J gamma, gamma) for theta = -.
inline std::pair<HClass, HClass> lift_pair(const CurveDictionary& dict, OrientedCurve oc) {
    if (oc.curve >= dict.size()) throw InvariantError("unknown curve index " + std::to_string(oc.curve));
    const auto& c = dict.curve(oc.curve);
    if (oc.theta == Theta::plus) return {c.lift, c.partner};
    return {c.partner, c.lift};
}

/// Checks that M is the homology shadow of a lift of a mapping class of N_g:
/// symplectic and commuting with the deck involution.
inline void require_lift_shadow(const CurveDictionary& dict, const Matrix& m) {
    if (m.size() != dict.rank())
        throw DimensionError("matrix of size " + std::to_string(m.size()) + " on a lattice of rank " +
                             std::to_string(dict.rank()));
    if (!is_symplectic(m)) throw InvariantError("matrix is not symplectic");
    if (!dict.deck().commutes_with(m))
        throw InvariantError("matrix does not commute with J: not a lift of a mapping class of N_g");
}

/// The curve omega(c) with the pushed orientation, computed on lifts: its selected
/// lift is M times the selected lift of `oc`.
inline OrientedCurve push_forward_curve(CurveDictionary& dict, const Matrix& m, OrientedCurve oc) {
    require_lift_shadow(dict, m);
    const auto& c = dict.curve(oc.curve);
    if (c.is_null()) return oc;
    return dict.lookup_or_register(m * lift_pair(dict, oc).first);
}

} // namespace nlf

#endif // NLF_COVER_HPP
