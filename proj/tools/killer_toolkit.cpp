// killer-toolkit: certificates for killers in knot groups.
//
// Exit codes: 0 every requested certificate produced, 1 some verdict is
// partial or refuted, 2 bad input, 3 hypothesis discovery or certificate
// replay failed.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "killer_toolkit/pipelines.hpp"

namespace {

kt::EnumerationLimits limitsFromEnv() {
    kt::EnumerationLimits limits;
    const char* spec = std::getenv("KILLER_TOOLKIT_LIMITS");
    if (!spec) return limits;
    std::string s(spec);
    auto comma = s.find(',');
    try {
        std::size_t used = 0;
        std::string head = s.substr(0, comma);
        limits.maxCosets = std::stoll(head, &used);
        if (used != head.size()) throw std::invalid_argument(head);
        if (comma != std::string::npos) {
            std::string tail = s.substr(comma + 1);
            limits.maxTimeMillis = std::stoll(tail, &used);
            if (used != tail.size()) throw std::invalid_argument(tail);
        }
    } catch (const std::exception&) {
        throw kt::InvalidParameters("KILLER_TOOLKIT_LIMITS must be 'cosets' or 'cosets,millis', got '" +
                                    s + "'");
    }
    if (limits.maxCosets <= 0 || limits.maxTimeMillis <= 0)
        throw kt::InvalidParameters("KILLER_TOOLKIT_LIMITS values must be positive");
    return limits;
}

kt::NRange parseNRange(const std::string& s) {
    auto bad = [&] {
        return kt::InvalidParameters("--n expects A..B or a single integer, got '" + s + "'");
    };
    try {
        std::size_t used = 0;
        auto dots = s.find("..", 1);  // offset 1: a leading '-' is a sign
        if (dots == std::string::npos) {
            long long v = std::stoll(s, &used);
            if (used != s.size()) throw bad();
            return {v, v};
        }
        std::string head = s.substr(0, dots), tail = s.substr(dots + 2);
        kt::NRange r;
        r.lo = std::stoll(head, &used);
        if (used != head.size()) throw bad();
        r.hi = std::stoll(tail, &used);
        if (used != tail.size()) throw bad();
        if (r.lo > r.hi) throw bad();
        return r;
    } catch (const kt::Error&) {
        throw;
    } catch (const std::exception&) {
        throw bad();
    }
}

std::string readFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw kt::MalformedInput("cannot read file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int emit(const kt::CertificateReport& rep, const std::string& format) {
    if (format == "json")
        std::cout << rep.toJson().dump(2) << "\n";
    else
        std::cout << rep.toText();
    return rep.allCertified ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"certificates for killers in knot groups"};
    app.set_version_flag("--version", std::string(kt::toolName) + " " + kt::toolVersion);
    app.require_subcommand(1);

    std::string format = "text";
    long long p = 0, q = 0, maxN = 8, twists = 0, searchN = 2;
    long long crossing = -1;
    std::string nRangeStr = "0..8";
    std::string file, wordText;
    bool searchNonKiller = false;

    auto addFormat = [&](CLI::App* sub) {
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* twoBridge =
        app.add_subcommand("two-bridge", "killer certificates for a 2-bridge knot b(p, q)");
    twoBridge->add_option("p", p, "odd determinant, at least 3")->required();
    twoBridge->add_option("q", q, "second parameter, coprime to p")->required();
    twoBridge->add_option("--max-n", maxN, "certify mu_n for n = 0..N");
    addFormat(twoBridge);

    CLI::App* torus = app.add_subcommand("torus", "killer certificates for a torus knot T(p, q)");
    torus->add_option("p", p, "first parameter")->required();
    torus->add_option("q", q, "second parameter")->required();
    torus->add_option("--n", nRangeStr, "certify mu_n for n in A..B");
    addFormat(torus);

    CLI::App* diagram =
        app.add_subcommand("diagram", "killer certificates for a PD-coded diagram");
    diagram->add_option("file", file, "PD code file")->required();
    diagram->add_option("--crossing", crossing,
                        "crossing to use (default: scan for an unknotting one)");
    diagram->add_option("--n", nRangeStr, "certify mu_n for n in A..B");
    diagram->add_option("--twists", twists, "splice this many extra twists at the crossing");
    addFormat(diagram);

    CLI::App* check = app.add_subcommand(
        "check-killer", "decide whether a word normally generates a presented group");
    check->add_option("file", file, "presentation or PD code file")->required();
    check->add_option("word", wordText, "word over the generators");
    check->add_flag("--search-non-killer", searchNonKiller,
                    "scan pseudo-meridian families mu_n over ordered meridian pairs");
    check->add_option("--n", searchN, "family index for the search");
    addFormat(check);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        kt::EnumerationLimits limits = limitsFromEnv();
        kt::CertificateReport rep;
        if (app.got_subcommand(twoBridge)) {
            rep = kt::cmdTwoBridge(p, q, maxN, limits);
        } else if (app.got_subcommand(torus)) {
            rep = kt::cmdTorus(p, q, parseNRange(nRangeStr), limits);
        } else if (app.got_subcommand(diagram)) {
            std::optional<std::size_t> cross;
            if (diagram->count("--crossing")) {
                if (crossing < 0) throw kt::IndexOutOfRange("--crossing must be nonnegative");
                cross = static_cast<std::size_t>(crossing);
            }
            rep = kt::cmdDiagram(file, readFile(file), cross, parseNRange(nRangeStr), twists,
                                 limits);
        } else {
            if (!searchNonKiller && wordText.empty())
                throw kt::InvalidParameters(
                    "a word to check is required unless --search-non-killer is given");
            std::optional<long long> search;
            if (searchNonKiller) search = searchN;
            rep = kt::cmdCheckKiller(file, readFile(file), wordText, limits, search);
        }
        return emit(rep, format);
    } catch (const kt::NoUnknottingCrossingFound& e) {
        std::cerr << kt::toolName << ": " << e.what() << "\n";
        return 3;
    } catch (const kt::ParseError& e) {
        std::cerr << kt::toolName << ": " << e.what() << "\n";
        return 2;
    } catch (const kt::MalformedInput& e) {
        std::cerr << kt::toolName << ": " << e.what() << "\n";
        return 2;
    } catch (const kt::InvalidParameters& e) {
        std::cerr << kt::toolName << ": " << e.what() << "\n";
        return 2;
    } catch (const kt::InvalidDiagram& e) {
        std::cerr << kt::toolName << ": " << e.what() << "\n";
        return 2;
    } catch (const kt::IndexOutOfRange& e) {
        std::cerr << kt::toolName << ": " << e.what() << "\n";
        return 2;
    } catch (const kt::NotAKnotGroupPresentation& e) {
        std::cerr << kt::toolName << ": " << e.what() << "\n";
        return 2;
    } catch (const kt::DuplicateGenerator& e) {
        std::cerr << kt::toolName << ": " << e.what() << "\n";
        return 2;
    } catch (const kt::Error& e) {
        std::cerr << kt::toolName << ": " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << kt::toolName << ": unexpected error: " << e.what() << "\n";
        return 3;
    }
}
