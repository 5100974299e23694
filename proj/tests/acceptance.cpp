// Prints one PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <cstdio>

#include "hbill/checks.hpp"

int main() {
    bool all = true;
    hbill::run_acceptance([&](const hbill::CheckResult& r) {
        std::printf("%s %s (%.2fs) %s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(), r.seconds, r.detail.c_str());
        std::fflush(stdout);
        all = all && r.pass;
    });
    return all ? 0 : 1;
}
