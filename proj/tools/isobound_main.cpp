#include "isobound/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    const isobound::CommandResult result = isobound::run(args);
    std::cout << isobound::render(result);
    for (const std::string& note : result.diagnostics) std::cerr << note << "\n";
    return result.exit_code();
}
