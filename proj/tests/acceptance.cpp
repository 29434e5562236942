// Prints one PASS/FAIL/SKIP line per acceptance criterion. Exits nonzero
// when any criterion fails; skipped criteria do not fail the run.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>

#include "support/criteria.hpp"

namespace {

struct Criterion {
    const char* name;
    std::function<criteria::Outcome()> check;
};

} // namespace

int main() {
    const Criterion all[] = {
        {"golden listings (forEach, slice, list print, applyDiscount, setFoo, sine, argv)", criteria::golden_listings},
        {"file structure (main-only module: no C++ header; empty module: no files)", criteria::file_structure},
        {"parenthesization (exhaustive <=4 ops, 1000 random trees)", criteria::parenthesization},
        {"pattern semantics (inOut, State, Observer, Strategy)", criteria::pattern_semantics},
        {"JSON round-trip over the gallery", criteria::json_round_trip},
        {"documentation (\\param/\\return counts, Makefile doc rule)", criteria::doc_generation},
        {"cross-language equivalence of the gallery", criteria::cross_language},
        {"doxygen accepts the generated config", criteria::doxygen_config},
    };
    int failures = 0;
    for (const auto& c : all) {
        auto start = std::chrono::steady_clock::now();
        criteria::Outcome o;
        try {
            o = c.check();
        } catch (const std::exception& e) {
            o = {criteria::Status::Fail, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const char* tag = o.status == criteria::Status::Pass ? "PASS" : o.status == criteria::Status::Fail ? "FAIL" : "SKIP";
        if (o.status == criteria::Status::Fail) ++failures;
        std::printf("%s  %s -- %s (%.2fs)\n", tag, c.name, o.detail.c_str(), secs);
    }
    return failures == 0 ? 0 : 1;
}
