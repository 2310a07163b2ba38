#include "ndl/cli.hpp"

int main(int argc, char** argv) { return ndl::run(argc, argv); }
