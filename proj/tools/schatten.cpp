#include <schatten/cli.hpp>

#include <iostream>

int main(int argc, char** argv) {
	return schatten::dispatch(argc, argv, std::cout, std::cerr);
}
