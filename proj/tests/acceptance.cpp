// Runs every identity check once and prints one line per check.
#include "wheelzeta/verify.hpp"

#include <cstdio>

int main() {
    wheelzeta::VerifyOptions opts;
    int failed = 0;
    for (const auto& info : wheelzeta::check_catalog()) {
        const auto r = wheelzeta::run_check(info.id, opts);
        std::printf("%s\n", wheelzeta::format_result_line(r).c_str());
        std::fflush(stdout);
        if (!r.passed) ++failed;
    }
    std::printf("%d of %zu checks failed\n", failed, wheelzeta::check_catalog().size());
    return failed == 0 ? 0 : 1;
}
