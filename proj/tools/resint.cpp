#include <iostream>
#include <string>
#include <vector>

#include "resint/commands.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    if (args.empty()) {
        std::cout << resint::cli::usage();
        return resint::cli::kInputError;
    }
    resint::cli::ExecResult res = resint::cli::execute(args);
    if (!res.report.is_null() && !res.report.empty()) std::cout << res.report.dump(2) << "\n";
    return res.exit_code;
}
