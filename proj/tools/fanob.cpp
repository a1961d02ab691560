#include "fanob/io.hpp"

int main(int argc, char** argv) { return fanob::run_cli(argc, argv); }
