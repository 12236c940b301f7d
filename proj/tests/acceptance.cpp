/* Acceptance harness: runs every verification item and prints one PASS/FAIL
 * line per criterion.  Exit status 0 iff all pass. */
#include <cstdio>
#include <cstdlib>

#include "verify_suite.hpp"

int main() {
    int jobs = 1;
    if (const char* env = std::getenv("VOA_MODULAR_JOBS")) jobs = std::atoi(env);
    bool all = true;
    for (const auto& o : voam::verify::run_all(jobs)) {
        std::printf("%s %2d %s\n", o.pass ? "PASS" : "FAIL", o.id, o.name.c_str());
        if (!o.pass && !o.detail.empty()) std::printf("     %s\n", o.detail.c_str());
        all = all && o.pass;
    }
    return all ? 0 : 1;
}
