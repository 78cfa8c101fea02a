#pragma once
// Killer verdicts. A word w is a killer for G = <gens | relators> when its
// normal closure is all of G, i.e. adding w as a relator collapses the
// presentation to the trivial group. Semidecidable both ways, so verdicts
// carry replayable evidence:
//   Verified - coset enumeration of <gens | relators, w> reaches index 1
//   Refuted  - a nontrivial quotient of G killing w (cyclic quotient from the
//              abelianization, a finite permutation quotient found by search,
//              or the coset action itself when enumeration closes at index > 1)
//   Unknown  - limits ran out with no proof either way

#include <optional>
#include <string>

#include "abelianization.hpp"
#include "finite_quotient.hpp"
#include "todd_coxeter.hpp"

namespace kt {

struct CosetProof {
    long long index = 0;
    long long cosetsDefined = 0;
    long long maxLive = 0;
};

struct KillerVerdict {
    enum class Status { Verified, Refuted, Unknown };
    Status status = Status::Unknown;
    std::optional<CosetProof> cosetProof;                   // Verified
    std::optional<CyclicQuotient> cyclicCert;               // Refuted via abelianization
    std::optional<FiniteQuotientCertificate> quotientCert;  // Refuted via finite quotient
    std::string note;

    bool verified() const { return status == Status::Verified; }
    bool refuted() const { return status == Status::Refuted; }
};

inline Presentation withExtraRelator(const Presentation& p, const Word& w) {
    Presentation q = p;
    q.relators.push_back(w);
    return q;
}

namespace detail {

// coset table as permutation certificate: generators act on the cosets
inline FiniteQuotientCertificate cosetActionCertificate(const Presentation& p, const Word& w,
                                                        const EnumerationResult& res) {
    FiniteQuotientCertificate cert;
    cert.target = {QuotientTarget::Kind::Symmetric, static_cast<int>(res.index)};
    cert.word = w;
    for (std::size_t g = 0; g < p.gens.size(); ++g) {
        Perm q = Perm::identity(static_cast<int>(res.index));
        for (std::size_t c = 0; c < res.table.size(); ++c)
            q.map[c] = static_cast<int>(res.table[c][2 * g]);
        cert.images.push_back(std::move(q));
    }
    // cosets of the trivial subgroup: the regular representation, so the
    // image is the whole quotient
    cert.imageOrder = res.index;
    return cert;
}

}  // namespace detail

inline KillerVerdict isKiller(const Presentation& p, const Word& w,
                              EnumerationLimits limits = {},
                              const std::vector<QuotientTarget>& refutationSpace =
                                  defaultSearchSpace()) {
    p.check();
    requireWordOver(p, w);
    KillerVerdict verdict;

    // fast path: a nontrivial cyclic quotient killing w refutes immediately
    if (auto cyc = findCyclicQuotientKilling(p, w)) {
        verdict.status = KillerVerdict::Status::Refuted;
        verdict.cyclicCert = cyc;
        verdict.note = "word dies in a nontrivial cyclic quotient (modulus " +
                       std::to_string(cyc->modulus) + ")";
        return verdict;
    }

    Presentation collapsed = withExtraRelator(p, w);
    EnumerationResult res = toddCoxeter(collapsed, {}, limits);
    if (res.completed && res.index == 1) {
        verdict.status = KillerVerdict::Status::Verified;
        verdict.cosetProof = CosetProof{res.index, res.cosetsDefined, res.maxLive};
        verdict.note = "normal closure fills the group: enumeration closed at index 1";
        return verdict;
    }
    if (res.completed && res.index > 1) {
        verdict.status = KillerVerdict::Status::Refuted;
        verdict.quotientCert = detail::cosetActionCertificate(p, w, res);
        verdict.note = "quotient by the word's normal closure is finite of order " +
                       std::to_string(res.index);
        if (!replayCertificate(p, *verdict.quotientCert))
            throw Error("coset action certificate failed replay (enumeration bug)");
        return verdict;
    }

    if (auto cert = findFiniteQuotientKilling(p, w, refutationSpace)) {
        verdict.status = KillerVerdict::Status::Refuted;
        verdict.quotientCert = cert;
        verdict.note = "word dies in a nontrivial finite quotient (target " +
                       cert->target.name() + ")";
        return verdict;
    }

    verdict.status = KillerVerdict::Status::Unknown;
    verdict.note = "enumeration hit its limits (" + std::to_string(res.cosetsDefined) +
                   " cosets defined) and no refuting quotient was found";
    return verdict;
}

// --- infinite-cyclic certification --------------------------------------

struct InfiniteCyclicResult {
    enum class Answer { Yes, No, Unknown };
    Answer answer = Answer::Unknown;
    std::optional<CosetProof> cosetProof;              // Yes
    std::optional<std::vector<Perm>> witnessImages;    // No
    std::optional<QuotientTarget> witnessTarget;       // No
    long long witnessImageOrder = 0;                   // No
    long long witnessMeridianOrder = 0;                // No
    std::string note;
};

// Certifies whether G is infinite cyclic, given a meridian: a distinguished
// word expected to generate the abelianization.
//   Yes: enumeration of cosets of <meridian> closes at index 1, so
//        G = <meridian>, and H_1 = Z makes G infinite cyclic.
//   No:  a finite quotient where the meridian's image generates a proper
//        subgroup of the full image; since the meridian generates H_1, an
//        infinite cyclic G would be generated by it outright.
// Throws NotAKnotGroupPresentation when H_1 is not Z or the meridian does
// not generate it.
inline InfiniteCyclicResult isInfiniteCyclicCertified(const Presentation& p, const Word& meridian,
                                                      EnumerationLimits limits = {}) {
    p.check();
    requireWordOver(p, meridian);
    SmithNormalForm snf = abelianization(p);
    if (!snf.quotientIsZ())
        throw NotAKnotGroupPresentation("abelianization is not infinite cyclic");
    // image of the meridian on the free coordinate must be a generator
    std::size_t freeCol = snf.diag.size();  // columns over rank are free
    {
        // find the single free coordinate: column index >= rank
        freeCol = snf.rank();
        long long image = 0;
        for (const auto& s : meridian.syls)
            image += s.e * snf.v[static_cast<std::size_t>(s.g)][freeCol];
        if (image != 1 && image != -1)
            throw NotAKnotGroupPresentation(
                "the distinguished word does not generate first homology (image " +
                std::to_string(image) + ")");
    }

    InfiniteCyclicResult out;
    EnumerationLimits capped = limits;
    capped.maxCosets = std::min<long long>(capped.maxCosets, 20'000);
    EnumerationResult res = toddCoxeter(p, {meridian}, capped);
    if (res.completed && res.index == 1) {
        out.answer = InfiniteCyclicResult::Answer::Yes;
        out.cosetProof = CosetProof{res.index, res.cosetsDefined, res.maxLive};
        out.note = "group is generated by the distinguished word and has H1 = Z";
        return out;
    }
    if (res.completed && res.index > 1) {
        out.answer = InfiniteCyclicResult::Answer::Unknown;
        out.note = "distinguished word generates a subgroup of finite index " +
                   std::to_string(res.index) + "; no certificate either way";
        return out;
    }

    using K = QuotientTarget::Kind;
    const std::vector<QuotientTarget> witnessSpace = {
        {K::Symmetric, 3}, {K::Symmetric, 4}, {K::Alternating, 5}, {K::Symmetric, 5}};
    for (const auto& target : witnessSpace) {
        auto hom = searchQuotientHom(p, target, std::nullopt,
                                     [&](const std::vector<Perm>& images) {
                                         long long whole = subgroupOrder(images, target.degree);
                                         Perm m = evalWord(images, meridian);
                                         long long part = subgroupOrder({m}, target.degree);
                                         return part < whole;
                                     });
        if (!hom) continue;
        out.answer = InfiniteCyclicResult::Answer::No;
        out.witnessImages = hom;
        out.witnessTarget = target;
        out.witnessImageOrder = subgroupOrder(*hom, target.degree);
        out.witnessMeridianOrder = subgroupOrder({evalWord(*hom, meridian)}, target.degree);
        out.note = "witness quotient in " + target.name() + ": image has order " +
                   std::to_string(out.witnessImageOrder) +
                   " but the distinguished word only generates order " +
                   std::to_string(out.witnessMeridianOrder);
        return out;
    }

    out.answer = InfiniteCyclicResult::Answer::Unknown;
    out.note = "enumeration hit its limits and no witness quotient was found";
    return out;
}

}
