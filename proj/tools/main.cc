#include <enabling/cli.hh>

#include <iostream>
#include <string>
#include <vector>

auto main(int argc, char * argv[]) -> int
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return enabling::run(args, std::cin, std::cout, std::cerr);
}
