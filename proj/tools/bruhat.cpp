#include "hbo/cli.hpp"

int main(int argc, char** argv) { return hbo::cli::run(argc, argv); }
