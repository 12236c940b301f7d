#pragma once

#include <functional>
#include <string>
#include <vector>

namespace voam::verify {

/* One verification item: run() returns pass/fail and may append detail text
 * (shown on failure). */
struct Item {
    int id;
    std::string name;
    std::function<bool(std::string&)> run;
};

std::vector<Item> acceptance_items();

struct Outcome {
    int id;
    std::string name;
    bool pass;
    std::string detail;
};

/* Runs every item, optionally on `jobs` worker threads (jobs <= 1 means
 * sequential); outcomes are returned ordered by id regardless of schedule. */
std::vector<Outcome> run_all(int jobs);

}  // namespace voam::verify
