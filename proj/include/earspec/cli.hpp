#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace earspec {

struct RunConfig {
    std::string command;
    std::string format = "json";  // json | tsv | human
    double tolerance = 1e-12;
    int jobs = 1;
};

// Full command-line entry point; argv-style args without the program name.
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 malformed
// input line.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace earspec
