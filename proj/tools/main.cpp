#include "cgt/cli.hpp"

int main(int argc, char** argv) { return cgt::run_cli(argc, argv); }
