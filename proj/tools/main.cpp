#include "cli.hpp"

int main(int argc, char** argv) { return fracsl::cli::run(argc, argv); }
