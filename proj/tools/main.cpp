#include "triwell/cli.hpp"

int main(int argc, char** argv) { return triwell::run_cli(argc, argv); }
