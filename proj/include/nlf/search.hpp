#ifndef NLF_SEARCH_HPP
#define NLF_SEARCH_HPP

// Equivalence search over the move set: invariant precheck, then a bidirectional
// breadth-first search on positive-normalized words keyed by canonical_key.
// Theta flips are free: every stored word is positive, and certificates carry
// the flips that connect literal words to their normal forms.

#include <nlf/certificate.hpp>
#include <nlf/cover.hpp>
#include <nlf/error.hpp>
#include <nlf/homology.hpp>
#include <nlf/words.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

namespace nlf {

struct Distinction {
    std::string invariant;
    std::string left;
    std::string right;
};

namespace detail {
inline std::string poly_text(const std::vector<Integer>& p) {
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + p[i].str();
    return s;
}
} // namespace detail

/// First move-invariant that differs between the two words, checked in the order
/// fiber, base, char_poly, identity monodromy flag, trace.
inline std::optional<Distinction> quick_distinguish(const Word& w1, const Word& w2, const CurveDictionary& dict) {
    if (w1.genus != w2.genus) return Distinction{"fiber", "N" + std::to_string(w1.genus), "N" + std::to_string(w2.genus)};
    if (w1.base != w2.base) return Distinction{"base", to_string(w1.base), to_string(w2.base)};
    const Matrix m1 = word_monodromy(w1, dict);
    const Matrix m2 = word_monodromy(w2, dict);
    const auto p1 = characteristic_polynomial(m1);
    const auto p2 = characteristic_polynomial(m2);
    if (p1 != p2) return Distinction{"char_poly", detail::poly_text(p1), detail::poly_text(p2)};
    const bool t1 = m1.is_identity();
    const bool t2 = m2.is_identity();
    if (t1 != t2) return Distinction{"s2_closure", t1 ? "true" : "false", t2 ? "true" : "false"};
    if (m1.trace() != m2.trace()) return Distinction{"trace", m1.trace().str(), m2.trace().str()};
    return std::nullopt;
}

struct SearchConfig {
    std::size_t max_depth = 4;
    std::size_t max_insert_letters = 4;
    std::set<MoveKind> allowed_moves{MoveKind::insert_pair_left_inv, MoveKind::insert_pair_right_inv,
                                     MoveKind::delete_pair, MoveKind::commute, MoveKind::conjugate_all};
    std::vector<Matrix> conjugator_pool;
    std::size_t node_budget = 100000;
    bool strict_positions = false;

    bool allows(MoveKind k) const { return allowed_moves.contains(k); }

    void validate(const CurveDictionary& dict) const {
        if (max_depth == 0) throw InvariantError("max_depth must be positive");
        if (node_budget == 0) throw InvariantError("node_budget must be positive");
        for (const auto& m : conjugator_pool) require_lift_shadow(dict, m);
    }
};

enum class Verdict : std::uint8_t { equivalent, distinguished, inconclusive };

constexpr const char* to_string(Verdict v) noexcept {
    switch (v) {
    case Verdict::equivalent: return "equivalent";
    case Verdict::distinguished: return "distinguished";
    case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

struct SearchStats {
    std::size_t nodes_expanded = 0;
    std::size_t nodes_stored = 0;
    std::size_t forward_depth = 0;
    std::size_t backward_depth = 0;
    std::string stop_reason;
};

struct SearchOutcome {
    Verdict verdict = Verdict::inconclusive;
    std::optional<MoveCertificate> certificate;
    std::optional<Distinction> distinction;
    SearchStats stats;
};

namespace detail {

struct SearchNode {
    Word word; // positive-normalized
    std::string key;
    std::int64_t parent = -1;
    Move move;                // move applied to the parent's word
    std::int64_t pool = -1;   // conjugator pool index for conjugation moves
    std::size_t depth = 0;
    std::size_t inserts = 0;
};

struct SearchSide {
    std::vector<SearchNode> nodes;
    std::unordered_map<std::string, std::size_t> visited;
    std::vector<std::size_t> frontier;
    std::size_t level = 0;

    std::size_t add(SearchNode n) {
        const std::size_t idx = nodes.size();
        visited.emplace(n.key, idx);
        nodes.push_back(std::move(n));
        return idx;
    }

    std::vector<std::size_t> path_from_root(std::size_t idx) const {
        std::vector<std::size_t> path;
        for (auto i = static_cast<std::int64_t>(idx); i >= 0; i = nodes[static_cast<std::size_t>(i)].parent)
            path.push_back(static_cast<std::size_t>(i));
        std::reverse(path.begin(), path.end());
        return path;
    }
};

/// Positions of letters with exponent -1 created by `m` on a positive word.
inline std::vector<std::size_t> negative_positions(const Move& m) {
    if (m.kind == MoveKind::insert_pair_left_inv) return {m.position};
    if (m.kind == MoveKind::insert_pair_right_inv) return {m.position + 1};
    return {};
}

inline std::vector<std::size_t> negative_positions(const Word& w) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i].exponent < 0) out.push_back(i);
    return out;
}

/// Collects moves, merging runs of flips: a flip at the same position twice cancels.
class MoveAssembler {
public:
    void flip(std::size_t pos) {
        if (!pending_.erase(pos)) pending_.insert(pos);
    }
    void flips(const std::vector<std::size_t>& ps) {
        for (auto p : ps) flip(p);
    }
    void push(Move m) {
        if (m.kind == MoveKind::theta_flip) {
            flip(m.position);
            return;
        }
        drain();
        moves_.push_back(std::move(m));
    }
    std::vector<Move> finish() {
        drain();
        return std::move(moves_);
    }

private:
    void drain() {
        for (auto p : pending_) moves_.push_back(Move::flip(p));
        pending_.clear();
    }
    std::set<std::size_t> pending_;
    std::vector<Move> moves_;
};

/// Insertion alphabet: both theta forms, exponent +1, of every curve in either word.
inline std::vector<Letter> insertion_alphabet(const Word& w1, const Word& w2) {
    std::set<Letter> out;
    for (const Word* w : {&w1, &w2}) {
        for (const auto& l : w->letters) {
            const Letter p = positive_form(l);
            out.insert(p);
            out.insert(positive_form(NonOrientableLetters::inverse(p)));
        }
    }
    return {out.begin(), out.end()};
}

} // namespace detail

/// Bidirectional BFS. `dict` is the working dictionary: conjugations may register
/// pushed curves in it. The returned certificate replays on a copy of the
/// dictionary as it was on entry.
inline SearchOutcome bfs_equivalent(const Word& w1, const Word& w2, const SearchConfig& cfg, CurveDictionary& dict) {
    using namespace detail;
    SearchOutcome out;
    NonOrientableLetters::check(dict, w1);
    NonOrientableLetters::check(dict, w2);
    cfg.validate(dict);
    if (auto d = quick_distinguish(w1, w2, dict)) {
        out.verdict = Verdict::distinguished;
        out.distinction = std::move(d);
        out.stats.stop_reason = "invariant";
        return out;
    }

    const CurveDictionary snapshot = dict;
    const std::uint64_t start_hash = word_hash(w1, snapshot);
    const std::uint64_t end_hash = word_hash(w2, snapshot);
    const auto alphabet = insertion_alphabet(w1, w2);

    SearchSide fwd;
    SearchSide bwd;
    for (auto [side, w] : {std::pair{&fwd, &w1}, std::pair{&bwd, &w2}}) {
        SearchNode root;
        root.word = normalize_positive(*w);
        root.key = canonical_key(root.word);
        side->frontier.push_back(side->add(std::move(root)));
    }

    auto build = [&](std::size_t fi, std::size_t bi) -> std::optional<MoveCertificate> {
        MoveAssembler as;
        as.flips(negative_positions(w1));
        const auto fpath = fwd.path_from_root(fi);
        for (std::size_t k = 1; k < fpath.size(); ++k) {
            const auto& n = fwd.nodes[fpath[k]];
            as.push(n.move);
            as.flips(negative_positions(n.move));
        }
        auto bpath = bwd.path_from_root(bi);
        for (std::size_t k = bpath.size(); k-- > 1;) {
            const auto& n = bwd.nodes[bpath[k]];
            const auto& parent = bwd.nodes[bpath[k - 1]];
            as.flips(negative_positions(n.move));
            for (auto& m : inverse_moves(parent.word, n.move)) as.push(std::move(m));
        }
        as.flips(negative_positions(w2));
        MoveCertificate cert{start_hash, end_hash, as.finish()};
        try {
            CurveDictionary scratch = snapshot;
            replay(cert, w1, scratch);
        } catch (const Error&) {
            return std::nullopt;
        }
        return cert;
    };

    if (fwd.nodes[0].key == bwd.nodes[0].key) {
        if (auto cert = build(0, 0)) {
            out.verdict = Verdict::equivalent;
            out.certificate = std::move(cert);
            out.stats.nodes_stored = 2;
            out.stats.stop_reason = "met";
            return out;
        }
    }

    auto successors = [&](const SearchNode& node, auto&& emit) {
        const Word& x = node.word;
        if (cfg.allows(MoveKind::delete_pair)) {
            for (std::size_t p = 0; p + 1 < x.size(); ++p) {
                if (!cancels_at(x, p)) continue;
                if (cfg.strict_positions && !is_strict_deletion(x, p)) continue;
                emit(Move::remove(p), -1, delete_cancelling_pair(x, p));
            }
        }
        if (cfg.allows(MoveKind::commute)) {
            for (std::size_t p = 0; p + 1 < x.size(); ++p) {
                if (x[p] == x[p + 1] || !NonOrientableLetters::commutes(dict, x[p], x[p + 1])) continue;
                emit(Move::commute(p), -1, commute_adjacent(x, p, dict));
            }
        }
        if (node.inserts < cfg.max_insert_letters) {
            for (std::size_t p = 0; p <= x.size(); ++p) {
                for (const auto& l : alphabet) {
                    for (auto order : {PairOrder::inverse_first, PairOrder::inverse_last}) {
                        const Move m = Move::insert(p, l, order);
                        if (!cfg.allows(m.kind)) continue;
                        if (cfg.strict_positions && !is_strict_insertion(x, p, l, order)) continue;
                        emit(m, -1, insert_cancelling_pair(x, p, l, order));
                    }
                }
            }
        }
        if (cfg.allows(MoveKind::conjugate_all)) {
            for (std::size_t j = 0; j < cfg.conjugator_pool.size(); ++j)
                emit(Move::conjugate(cfg.conjugator_pool[j]), static_cast<std::int64_t>(j),
                     conjugate_all(x, cfg.conjugator_pool[j], dict));
        }
    };

    while (true) {
        out.stats.forward_depth = fwd.level;
        out.stats.backward_depth = bwd.level;
        if (fwd.level + bwd.level >= cfg.max_depth) {
            out.stats.stop_reason = "depth";
            break;
        }
        if (fwd.frontier.empty() && bwd.frontier.empty()) {
            out.stats.stop_reason = "exhausted";
            break;
        }
        const bool forward = !fwd.frontier.empty() &&
                             (bwd.frontier.empty() || fwd.frontier.size() <= bwd.frontier.size());
        SearchSide& side = forward ? fwd : bwd;
        const SearchSide& other = forward ? bwd : fwd;

        std::vector<std::size_t> next;
        std::vector<std::string> meetings;
        bool over_budget = false;
        for (const std::size_t idx : side.frontier) {
            ++out.stats.nodes_expanded;
            // Copy: emitting may reallocate side.nodes.
            const SearchNode node = side.nodes[idx];
            successors(node, [&](const Move& m, std::int64_t pool, Word raw) {
                if (over_budget) return;
                SearchNode child;
                child.word = normalize_positive(raw);
                child.key = canonical_key(child.word);
                if (side.visited.contains(child.key)) return;
                if (fwd.nodes.size() + bwd.nodes.size() >= cfg.node_budget) {
                    over_budget = true;
                    return;
                }
                child.parent = static_cast<std::int64_t>(idx);
                child.move = m;
                child.pool = pool;
                child.depth = node.depth + 1;
                child.inserts = node.inserts + (m.kind == MoveKind::insert_pair_left_inv ||
                                                m.kind == MoveKind::insert_pair_right_inv);
                if (other.visited.contains(child.key)) meetings.push_back(child.key);
                next.push_back(side.add(std::move(child)));
            });
            if (over_budget) break;
        }
        ++side.level;
        std::sort(next.begin(), next.end(),
                  [&](std::size_t a, std::size_t b) { return side.nodes[a].key < side.nodes[b].key; });
        side.frontier = std::move(next);
        out.stats.nodes_stored = fwd.nodes.size() + bwd.nodes.size();

        std::sort(meetings.begin(), meetings.end());
        meetings.erase(std::unique(meetings.begin(), meetings.end()), meetings.end());
        for (const auto& key : meetings) {
            if (auto cert = build(fwd.visited.at(key), bwd.visited.at(key))) {
                out.verdict = Verdict::equivalent;
                out.certificate = std::move(cert);
                out.stats.forward_depth = fwd.level;
                out.stats.backward_depth = bwd.level;
                out.stats.stop_reason = "met";
                return out;
            }
        }
        if (over_budget) {
            out.stats.stop_reason = "budget";
            break;
        }
    }
    out.verdict = Verdict::inconclusive;
    return out;
}

} // namespace nlf

#endif // NLF_SEARCH_HPP
