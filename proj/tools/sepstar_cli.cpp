#include <iostream>

#include <sepstar/cli.hpp>

int main(int argc, char **argv)
{
    return sepstar::run_command(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
