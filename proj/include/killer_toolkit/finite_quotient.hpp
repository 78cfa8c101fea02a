#pragma once
// Direct homomorphism search into small symmetric/alternating targets.
// Backtracking over generator images with two pruning devices:
//   - propagation: a relator whose only unassigned generator occurs once
//     determines that generator's image outright;
//   - parity: the sign character of any hom solving the relators (and
//     killing the target word, when one is given) satisfies a linear system
//     over F2; generators forced even get half the candidate pool.
// The first generator assigned ranges over conjugacy-class representatives
// only (search up to global conjugation).

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "permutation.hpp"
#include "presentation.hpp"

namespace kt {

struct QuotientTarget {
    enum class Kind { Symmetric, Alternating };
    Kind kind = Kind::Symmetric;
    int degree = 3;

    std::string name() const {
        return (kind == Kind::Symmetric ? "S" : "A") + std::to_string(degree);
    }
    std::string description() const {
        return std::string(kind == Kind::Symmetric ? "symmetric" : "alternating") +
               " group of degree " + std::to_string(degree);
    }
    long long order() const {
        long long f = 1;
        for (int i = 2; i <= degree; ++i) f *= i;
        return kind == Kind::Symmetric ? f : f / 2;
    }
    friend bool operator==(const QuotientTarget&, const QuotientTarget&) = default;
};

// searched in increasing group order; degree 7 is the ceiling
inline std::vector<QuotientTarget> defaultSearchSpace() {
    using K = QuotientTarget::Kind;
    return {
        {K::Symmetric, 3}, {K::Symmetric, 4}, {K::Alternating, 5},
        {K::Symmetric, 5}, {K::Symmetric, 6}, {K::Symmetric, 7},
    };
}

struct FiniteQuotientCertificate {
    QuotientTarget target;
    std::vector<Perm> images;  // one per generator
    Word word;                 // maps to the identity
    long long imageOrder = 0;
};

inline bool replayCertificate(const Presentation& p, const FiniteQuotientCertificate& c) {
    if (c.images.size() != p.gens.size()) return false;
    for (const auto& img : c.images)
        if (img.degree() != c.target.degree) return false;
    if (c.target.kind == QuotientTarget::Kind::Alternating)
        for (const auto& img : c.images)
            if (!img.isEven()) return false;
    for (const auto& r : p.relators)
        if (!evalWord(c.images, r).isIdentity()) return false;
    if (!evalWord(c.images, c.word).isIdentity()) return false;
    bool nontrivial = false;
    for (const auto& img : c.images) nontrivial = nontrivial || !img.isIdentity();
    return nontrivial;
}

namespace detail {

inline std::vector<Perm> allPerms(int degree, bool evenOnly) {
    std::vector<int> v(static_cast<std::size_t>(degree));
    std::iota(v.begin(), v.end(), 0);
    std::vector<Perm> out;
    do {
        Perm p{v};
        if (!evenOnly || p.isEven()) out.push_back(p);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

// one representative per cycle type (= conjugacy class of S_d)
inline std::vector<Perm> classReps(int degree, bool evenOnly) {
    std::vector<Perm> out;
    std::vector<int> part;
    std::function<void(int, int)> rec = [&](int remaining, int maxPart) {
        if (remaining == 0) {
            Perm p = Perm::identity(degree);
            int at = 0;
            for (int len : part) {
                for (int i = 0; i < len; ++i)
                    p.map[static_cast<std::size_t>(at + i)] = at + (i + 1) % len;
                at += len;
            }
            if (!evenOnly || p.isEven()) out.push_back(p);
            return;
        }
        for (int next = std::min(remaining, maxPart); next >= 1; --next) {
            part.push_back(next);
            rec(remaining - next, next);
            part.pop_back();
        }
    };
    rec(degree, degree);
    return out;
}

// F2 parity system: sign vectors sigma with sigma . row = 0 for every
// exponent row. Returns, per generator, whether its sign is forced to 0.
inline std::vector<bool> evenForced(const Presentation& p,
                                    const std::vector<const Word*>& extraRows) {
    std::size_t n = p.gens.size();
    std::vector<std::vector<int>> rows;
    auto pushRow = [&](const Word& w) {
        std::vector<int> row(n, 0);
        for (const auto& s : w.syls)
            row[static_cast<std::size_t>(s.g)] ^= static_cast<int>(((s.e % 2) + 2) % 2);
        rows.push_back(std::move(row));
    };
    for (const auto& r : p.relators) pushRow(r);
    for (const Word* w : extraRows) pushRow(*w);

    std::size_t rank = 0;
    std::vector<std::size_t> pivotOfRow;
    for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != rank && rows[r][col])
                for (std::size_t c2 = 0; c2 < n; ++c2) rows[r][c2] ^= rows[rank][c2];
        pivotOfRow.push_back(col);
        ++rank;
    }
    // sigma_i = 0 in every solution iff i is a pivot column whose echelon row
    // has no support on free columns
    std::vector<bool> isPivot(n, false);
    for (std::size_t c : pivotOfRow) isPivot[c] = true;
    std::vector<bool> forced(n, false);
    for (std::size_t r = 0; r < rank; ++r) {
        bool touchesFree = false;
        for (std::size_t c = 0; c < n; ++c)
            if (rows[r][c] && !isPivot[c]) touchesFree = true;
        if (!touchesFree) forced[pivotOfRow[r]] = true;
    }
    return forced;
}

struct QuotientSearch {
    const Presentation& p;
    QuotientTarget target;
    std::optional<Word> killWord;    // must die at leaves; joins the parity system
    std::optional<Word> parityWord;  // joins the parity system only
    std::function<bool(const std::vector<Perm>&)> extraLeafCheck;
    bool collectAll = false;

    std::vector<std::vector<Perm>> found;

    QuotientSearch(const Presentation& pres, QuotientTarget t) : p(pres), target(t) {}

    void run() {
        bool altTarget = target.kind == QuotientTarget::Kind::Alternating;
        fullPool_ = allPerms(target.degree, altTarget);
        evenPool_ = altTarget ? fullPool_ : allPerms(target.degree, true);
        firstReps_ = classReps(target.degree, altTarget);
        firstRepsEven_ = classReps(target.degree, true);
        std::vector<const Word*> extra;
        if (killWord) extra.push_back(&*killWord);
        if (parityWord) extra.push_back(&*parityWord);
        forcedEven_ = evenForced(p, extra);
        img_.assign(p.gens.size(), std::nullopt);
        found.clear();
        recurse(true);
    }

  private:
    std::vector<Perm> fullPool_, evenPool_, firstReps_, firstRepsEven_;
    std::vector<bool> forcedEven_;
    std::vector<std::optional<Perm>> img_;

    bool assigned(Gen g) const { return img_[static_cast<std::size_t>(g)].has_value(); }

    Perm eval(const Word& w) const {
        Perm acc = Perm::identity(target.degree);
        forEachLetter(w, [&](Gen g, int sign) {
            const Perm& q = *img_[static_cast<std::size_t>(g)];
            acc = sign > 0 ? acc * q : acc * q.inverse();
        });
        return acc;
    }

    // 1 = assigned one generator, 0 = contradiction, -1 = quiescent
    int propagateOnce() {
        for (const auto& r : p.relators) {
            Gen pending = -1;
            long long pendingLetters = 0;
            bool multiGen = false;
            for (const auto& s : r.syls) {
                if (assigned(s.g)) continue;
                if (pending >= 0 && pending != s.g) multiGen = true;
                pending = s.g;
                pendingLetters += std::llabs(s.e);
            }
            if (pending < 0) {
                if (!eval(r).isIdentity()) return 0;
                continue;
            }
            if (multiGen || pendingLetters != 1) continue;
            // r = u g^s v  =>  phi(g)^s = phi(u)^-1 phi(v)^-1
            Word u, v;
            long long s = 0;
            for (std::size_t i = 0; i < r.syls.size(); ++i) {
                if (r.syls[i].g == pending) {
                    s = r.syls[i].e;
                    u.syls.assign(r.syls.begin(), r.syls.begin() + static_cast<long>(i));
                    v.syls.assign(r.syls.begin() + static_cast<long>(i) + 1, r.syls.end());
                    break;
                }
            }
            Perm rhs = eval(u).inverse() * eval(v).inverse();
            Perm value = s == 1 ? rhs : rhs.inverse();
            bool mustBeEven = forcedEven_[static_cast<std::size_t>(pending)] ||
                              target.kind == QuotientTarget::Kind::Alternating;
            if (mustBeEven && !value.isEven()) return 0;
            img_[static_cast<std::size_t>(pending)] = std::move(value);
            return 1;
        }
        return -1;
    }

    Gen pickBranchGen() const {
        // prefer the most constrained relator's lowest unassigned generator
        Gen best = -1;
        std::size_t bestCount = SIZE_MAX;
        for (const auto& r : p.relators) {
            std::size_t cnt = 0;
            Gen candidate = -1;
            for (const auto& s : r.syls)
                if (!assigned(s.g)) {
                    ++cnt;
                    if (candidate < 0 || s.g < candidate) candidate = s.g;
                }
            if (cnt > 0 && cnt < bestCount) {
                bestCount = cnt;
                best = candidate;
            }
        }
        if (best >= 0) return best;
        for (std::size_t g = 0; g < img_.size(); ++g)
            if (!img_[g]) return static_cast<Gen>(g);
        return -1;
    }

    // returns true to stop the whole search (first hit in find-one mode)
    bool leaf() {
        for (const auto& r : p.relators)
            if (!eval(r).isIdentity()) return false;
        if (killWord && !eval(*killWord).isIdentity()) return false;
        bool nontrivial = false;
        for (const auto& q : img_) nontrivial = nontrivial || !q->isIdentity();
        if (!nontrivial) return false;
        std::vector<Perm> images;
        images.reserve(img_.size());
        for (const auto& q : img_) images.push_back(*q);
        if (extraLeafCheck && !extraLeafCheck(images)) return false;
        found.push_back(std::move(images));
        return !collectAll;
    }

    bool recurse(bool firstBranch) {
        auto snapshot = img_;
        while (true) {
            int r = propagateOnce();
            if (r == 0) {
                img_ = snapshot;
                return false;
            }
            if (r == -1) break;
            firstBranch = false;
        }
        Gen g = pickBranchGen();
        if (g < 0) {
            bool stop = leaf();
            img_ = snapshot;
            return stop;
        }
        const bool even = forcedEven_[static_cast<std::size_t>(g)];
        const std::vector<Perm>& pool =
            firstBranch ? (even ? firstRepsEven_ : firstReps_) : (even ? evenPool_ : fullPool_);
        for (const auto& candidate : pool) {
            img_[static_cast<std::size_t>(g)] = candidate;
            if (recurse(false)) {
                img_ = snapshot;
                return true;
            }
            img_[static_cast<std::size_t>(g)] = std::nullopt;
        }
        img_ = snapshot;
        return false;
    }
};

}  // namespace detail

// Search one target for a hom satisfying the relators, optionally killing a
// word and passing an extra check; nontrivial image required.
inline std::optional<std::vector<Perm>> searchQuotientHom(
    const Presentation& p, QuotientTarget target, const std::optional<Word>& killWord = {},
    std::function<bool(const std::vector<Perm>&)> extraLeafCheck = {}) {
    p.check();
    if (killWord) requireWordOver(p, *killWord);
    detail::QuotientSearch search(p, target);
    search.killWord = killWord;
    search.extraLeafCheck = std::move(extraLeafCheck);
    search.run();
    if (search.found.empty()) return std::nullopt;
    return search.found.front();
}

// All relator-satisfying nontrivial homs into the target, one representative
// per first-generator conjugacy class. parityWord joins the F2 sign system
// (useful when every word later tested has the same odd/even profile) without
// being required to die.
inline std::vector<std::vector<Perm>> enumerateQuotientHoms(
    const Presentation& p, QuotientTarget target, const std::optional<Word>& parityWord = {}) {
    p.check();
    if (parityWord) requireWordOver(p, *parityWord);
    detail::QuotientSearch search(p, target);
    search.parityWord = parityWord;
    search.collectAll = true;
    search.run();
    return search.found;
}

inline std::optional<FiniteQuotientCertificate> findFiniteQuotientKilling(
    const Presentation& p, const Word& w,
    const std::vector<QuotientTarget>& searchSpace = defaultSearchSpace()) {
    for (const auto& target : searchSpace) {
        auto hom = searchQuotientHom(p, target, w);
        if (!hom) continue;
        FiniteQuotientCertificate cert;
        cert.target = target;
        cert.images = *hom;
        cert.word = w;
        cert.imageOrder = subgroupOrder(cert.images, target.degree);
        if (!replayCertificate(p, cert))
            throw Error("finite quotient certificate failed replay (search bug)");
        return cert;
    }
    return std::nullopt;
}

// Witness that two words have noncommuting images in a finite quotient, which
// certifies they do not commute in the group itself.
struct NoncommutingWitness {
    QuotientTarget target;
    std::vector<Perm> images;
    Word left, right;
};

inline bool replayNoncommutingWitness(const Presentation& p, const NoncommutingWitness& w) {
    if (w.images.size() != p.gens.size()) return false;
    for (const auto& img : w.images)
        if (img.degree() != w.target.degree) return false;
    if (w.target.kind == QuotientTarget::Kind::Alternating)
        for (const auto& img : w.images)
            if (!img.isEven()) return false;
    for (const auto& r : p.relators)
        if (!evalWord(w.images, r).isIdentity()) return false;
    Perm a = evalWord(w.images, w.left), b = evalWord(w.images, w.right);
    return !(a * b == b * a);
}

inline std::optional<NoncommutingWitness> findNoncommutingWitness(
    const Presentation& p, const Word& left, const Word& right,
    const std::vector<QuotientTarget>& searchSpace = defaultSearchSpace()) {
    p.check();
    requireWordOver(p, left);
    requireWordOver(p, right);
    for (const auto& target : searchSpace) {
        auto hom = searchQuotientHom(p, target, {}, [&](const std::vector<Perm>& imgs) {
            Perm a = evalWord(imgs, left), b = evalWord(imgs, right);
            return !(a * b == b * a);
        });
        if (!hom) continue;
        NoncommutingWitness w{target, *hom, left, right};
        if (!replayNoncommutingWitness(p, w))
            throw Error("noncommuting witness failed replay (search bug)");
        return w;
    }
    return std::nullopt;
}

}
