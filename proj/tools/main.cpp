#include <iostream>
#include <string>
#include <vector>

#include "logistic/cli.hpp"

int main(int argc, char** argv) {
  return logistic::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
