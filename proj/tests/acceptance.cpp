// End-to-end acceptance run: one line per criterion, non-zero exit on failure.
#include <cstdio>
#include <cstring>

#include "wb/repro.hpp"

int main(int argc, char** argv) {
    bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;
    std::vector<wb::CriterionResult> rows = wb::run_criteria(quick);
    std::fputs(wb::render_criteria(rows).c_str(), stdout);
    return wb::all_passed(rows) ? 0 : 1;
}
