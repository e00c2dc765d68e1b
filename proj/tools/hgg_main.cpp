#include "hgg/cli.hpp"

int main(int argc, char** argv) { return hgg::cli::run(argc, argv); }
