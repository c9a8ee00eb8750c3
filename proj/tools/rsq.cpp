#include "rsq/cli.hpp"

int main(int argc, char** argv) { return rsq::cli::run(std::vector<std::string>(argv, argv + argc)); }
