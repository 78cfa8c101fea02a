#pragma once

// Certificate reports: one JSON or text document per CLI run. Key order is
// fixed (nlohmann ordered_json) and floating-point fields are rounded to 12
// significant digits before serialization, so identical inputs and limits
// give byte-identical JSON apart from the timing_ms field.

#include <json.hpp>

#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "killer_toolkit/abelianization.hpp"
#include "killer_toolkit/finite_quotient.hpp"
#include "killer_toolkit/int_polynomial.hpp"
#include "killer_toolkit/killer.hpp"
#include "killer_toolkit/presentation.hpp"
#include "killer_toolkit/version.hpp"

namespace kt {

using Json = nlohmann::ordered_json;

inline double roundSig(double x) {
    if (x == 0.0 || !std::isfinite(x)) return x == 0.0 ? 0.0 : x;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

inline Json jsonComplex(std::complex<double> z) {
    return Json::array({roundSig(z.real()), roundSig(z.imag())});
}

// ascending integer coefficient list
inline Json jsonPoly(const IntPolynomial& f) {
    Json a = Json::array();
    for (const auto& c : f.c) a.push_back(c.convert_to<long long>());
    return a;
}

inline Json jsonPerm(const Perm& p) {
    Json a = Json::array();
    for (int v : p.map) a.push_back(v);
    return a;
}

inline Json jsonCosetProof(const CosetProof& c) {
    return Json{{"index", c.index},
                {"cosets_defined", c.cosetsDefined},
                {"max_live", c.maxLive}};
}

inline Json jsonQuotientCertificate(const FiniteQuotientCertificate& c, const Presentation& p) {
    Json images = Json::array();
    for (const auto& q : c.images) images.push_back(jsonPerm(q));
    return Json{{"target", c.target.name()},
                {"images", images},
                {"word", printWord(c.word, p)},
                {"image_order", c.imageOrder}};
}

inline Json jsonCyclicQuotient(const CyclicQuotient& c) {
    Json imgs = Json::array();
    for (long long v : c.genImages) imgs.push_back(v);
    return Json{{"modulus", c.modulus}, {"generator_images", imgs}};
}

inline Json jsonNoncommutingWitness(const NoncommutingWitness& w, const Presentation& p) {
    Json images = Json::array();
    for (const auto& q : w.images) images.push_back(jsonPerm(q));
    return Json{{"target", w.target.name()},
                {"images", images},
                {"left", printWord(w.left, p)},
                {"right", printWord(w.right, p)}};
}

inline const char* killerStatusName(KillerVerdict::Status s) {
    switch (s) {
        case KillerVerdict::Status::Verified: return "Verified";
        case KillerVerdict::Status::Refuted: return "Refuted";
        default: return "Unknown";
    }
}

// status + the one evidence object the status carries
inline Json jsonKillerVerdict(const KillerVerdict& v, const Presentation& p) {
    Json out{{"status", killerStatusName(v.status)}};
    if (v.cosetProof) {
        out["proof_kind"] = "coset table summary";
        out["proof"] = jsonCosetProof(*v.cosetProof);
    } else if (v.cyclicCert) {
        out["proof_kind"] = "cyclic quotient";
        out["proof"] = jsonCyclicQuotient(*v.cyclicCert);
    } else if (v.quotientCert) {
        out["proof_kind"] = "finite quotient certificate";
        out["proof"] = jsonQuotientCertificate(*v.quotientCert, p);
    } else {
        out["proof_kind"] = "none";
    }
    out["note"] = v.note;
    return out;
}

inline Json jsonInfiniteCyclic(const InfiniteCyclicResult& r) {
    const char* answer = r.answer == InfiniteCyclicResult::Answer::Yes   ? "Yes"
                         : r.answer == InfiniteCyclicResult::Answer::No ? "No"
                                                                        : "Unknown";
    Json out{{"answer", answer}};
    if (r.cosetProof) out["coset_proof"] = jsonCosetProof(*r.cosetProof);
    if (r.witnessTarget) {
        Json images = Json::array();
        for (const auto& q : *r.witnessImages) images.push_back(jsonPerm(q));
        out["witness"] = Json{{"target", r.witnessTarget->name()},
                              {"images", images},
                              {"image_order", r.witnessImageOrder},
                              {"meridian_order", r.witnessMeridianOrder}};
    }
    out["note"] = r.note;
    return out;
}

// One document per run. `details` and the per-n proof objects are plain JSON
// assembled by the pipelines; everything here is order- and value-stable.
struct CertificateReport {
    std::string branch;  // two-bridge | torus | diagram | word-check
    std::string inputDescription;
    std::vector<std::string> assumptions;
    std::vector<std::string> errata;
    Json details = Json::object();
    std::vector<Json> perN;  // each {"n", "word", "verdict", "proof_kind", "proof", ...}
    Json nonconjugacy;       // certificate object, or null when not applicable
    bool allCertified = true;
    double timingMs = 0;

    Json toJson() const {
        Json j{{"tool", toolName},
               {"version", toolVersion},
               {"branch", branch},
               {"input", inputDescription},
               {"assumptions", assumptions},
               {"errata", errata},
               {"details", details},
               {"per_n", perN},
               {"nonconjugacy", nonconjugacy.is_null() ? Json() : nonconjugacy},
               {"all_certified", allCertified},
               {"timing_ms", roundSig(timingMs)}};
        return j;
    }

    std::string toText() const {
        std::ostringstream os;
        os << toolName << ' ' << toolVersion << " — " << branch << " report\n";
        os << "input: " << inputDescription << '\n';
        for (const auto& a : assumptions) os << "assumption: " << a << '\n';
        for (const auto& e : errata) os << "errata: " << e << '\n';
        if (!details.empty()) {
            for (auto it = details.begin(); it != details.end(); ++it) {
                os << it.key() << ": ";
                if (it.value().is_string())
                    os << it.value().get<std::string>();
                else
                    os << it.value().dump();
                os << '\n';
            }
        }
        for (const auto& e : perN) {
            os << "n = " << e.value("n", Json()).dump() << ": "
               << e.value("verdict", std::string("?"));
            if (e.contains("proof_kind")) os << " [" << e["proof_kind"].get<std::string>() << "]";
            if (e.contains("word")) os << "  " << e["word"].get<std::string>();
            os << '\n';
            if (e.contains("transcript"))
                for (const auto& line : e["transcript"])
                    os << "    " << line.get<std::string>() << '\n';
        }
        if (!nonconjugacy.is_null()) os << "nonconjugacy: " << nonconjugacy.dump() << '\n';
        os << "all certified: " << (allCertified ? "yes" : "no") << '\n';
        os << "timing: " << roundSig(timingMs) << " ms\n";
        return os.str();
    }
};

// Lossless inverse of toJson (timing included); used by the round-trip tests.
inline CertificateReport reportFromJson(const Json& j) {
    CertificateReport r;
    r.branch = j.at("branch").get<std::string>();
    r.inputDescription = j.at("input").get<std::string>();
    for (const auto& a : j.at("assumptions")) r.assumptions.push_back(a.get<std::string>());
    for (const auto& e : j.at("errata")) r.errata.push_back(e.get<std::string>());
    r.details = j.at("details");
    for (const auto& e : j.at("per_n")) r.perN.push_back(e);
    r.nonconjugacy = j.at("nonconjugacy");
    r.allCertified = j.at("all_certified").get<bool>();
    r.timingMs = j.at("timing_ms").get<double>();
    return r;
}

}  // namespace kt
