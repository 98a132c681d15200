#include "common.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>

namespace mpls::verify {

namespace detail {

std::uint64_t name_salt(const std::string& name) {
    std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
    for (unsigned char c : name) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

void Accumulator::add(const Outcome& o) {
    ++check_.cases;
    check_.max_error = std::max(check_.max_error, o.error);
    if (!o.ok) {
        if (check_.failures == 0) check_.first_failure = o.message;
        ++check_.failures;
    }
}

std::vector<Place> places_or(const Options& o, const std::vector<Place>& defaults) {
    if (!o.place) return defaults;
    return {*o.place};
}

std::vector<int> ranks_or(const Options& o, const std::vector<int>& defaults) {
    if (o.n <= 0) return defaults;
    return {o.n};
}

long trials_or(const Options& o, long fallback) { return o.trials > 0 ? o.trials : fallback; }

}  // namespace detail

bool Report::passed() const {
    if (checks.empty()) return false;
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed(); });
}

const std::vector<SuiteInfo>& suites() {
    static const std::vector<SuiteInfo> list = {
        {"hilbert", 1, "Hilbert symbols: bilinearity, non-degeneracy, Q_2 table, reciprocity"},
        {"weil", 2, "Weil factor: closed form vs principal-value sums, multiplicativity, image sizes"},
        {"cocycle", 3, "Rao cocycle identity fuzz and Kubota agreement"},
        {"calibration", 4, "Cocycle special cases, v_lambda, GSp cocycle, tau-bar"},
        {"splitting", 5, "Splittings over compact subgroups and the Siegel parabolic"},
        {"so2", 6, "SO_2(R) double cover on the pi/12 grid"},
        {"localcoef", 7, "Local coefficient: integral route vs closed form"},
        {"mellin", 8, "Tate and metaplectic gamma integrals, phi-tilde, measures"},
        {"symbolic", 9, "Symbolic gamma-factor identities"},
        {"reducibility", 10, "Principal-series reducibility criterion"},
        {"archimedean", 11, "Real and complex local coefficients"},
    };
    return list;
}

Report run(const std::string& name, const Options& options) {
    using Fn = std::function<std::vector<Check>(const Options&)>;
    static const std::map<std::string, Fn> table = {
        {"hilbert", detail::suite_hilbert},         {"weil", detail::suite_weil},
        {"cocycle", detail::suite_cocycle},         {"calibration", detail::suite_calibration},
        {"splitting", detail::suite_splitting},     {"so2", detail::suite_so2},
        {"localcoef", detail::suite_localcoef},     {"mellin", detail::suite_mellin},
        {"symbolic", detail::suite_symbolic},       {"reducibility", detail::suite_reducibility},
        {"archimedean", detail::suite_archimedean},
    };
    auto it = table.find(name);
    if (it == table.end()) throw DomainError("unknown suite '" + name + "'");
    Report r;
    r.suite = name;
    for (const auto& s : suites())
        if (s.name == name) r.title = s.title;
    auto t0 = std::chrono::steady_clock::now();
    r.checks = it->second(options);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

}  // namespace mpls::verify
