#include <gordian/cli.hpp>

#include <iostream>

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    const gordian::CommandResult r = gordian::run(args);
    std::cout << r.document().dump(2) << '\n';
    if (r.status == gordian::CommandResult::Status::usage_error) {
        std::cerr << "usage error: " << r.message << '\n';
    } else if (!r.summary.empty()) {
        std::cerr << r.summary << '\n';
    }
    return r.exit_code();
}
