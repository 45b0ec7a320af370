#include <iostream>
#include <string>
#include <vector>

#include "acceptance.hpp"

// One line per criterion; exit status is the number of failures.
int main(int argc, char** argv) {
    std::vector<int> ids;
    for (int i = 1; i < argc; ++i) {
        ids.push_back(std::stoi(argv[i]));
    }
    hdecomp::acceptance::Options o;
    o.threads = 4;
    const int failures = hdecomp::acceptance::run_all(ids, o, std::cout);
    std::cout << (failures == 0 ? "acceptance: all criteria passed" : "acceptance: failures present") << "\n";
    return failures == 0 ? 0 : 1;
}
