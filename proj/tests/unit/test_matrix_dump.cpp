#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include "oracles.hpp"
#include "stablegft/errors.hpp"
#include "stablegft/matrix_dump.hpp"
#include "temp_dir.hpp"

using namespace stablegft;
using testutil::TempDir;

TEST_SUITE("matrix_dump") {

TEST_CASE("binary save/load round-trips bit for bit") {
    TempDir dir;
    std::mt19937_64 rng(21);
    ComplexMatrix M = oracle::random_matrix(7, 4, rng);
    io::save_matrix(M, dir.file("m.bin"));
    ComplexMatrix back = io::load_matrix(dir.file("m.bin"));
    REQUIRE(back.rows() == 7);
    REQUIRE(back.cols() == 4);
    CHECK((back - M).norm() == 0.0);
}

TEST_CASE("binary loader rejects corrupted files") {
    TempDir dir;
    std::mt19937_64 rng(22);
    ComplexMatrix M = oracle::random_matrix(3, 3, rng);

    io::save_matrix(M, dir.file("magic.bin"));
    {
        std::fstream f(dir.file("magic.bin"),
                       std::ios::in | std::ios::out | std::ios::binary);
        f.write("XXXX", 4);
    }
    CHECK_THROWS_AS(io::load_matrix(dir.file("magic.bin")), ParseError);

    io::save_matrix(M, dir.file("short.bin"));
    std::filesystem::resize_file(dir.file("short.bin"),
                                 std::filesystem::file_size(dir.file("short.bin")) - 8);
    CHECK_THROWS_AS(io::load_matrix(dir.file("short.bin")), ParseError);

    io::save_matrix(M, dir.file("long.bin"));
    {
        std::ofstream f(dir.file("long.bin"), std::ios::app | std::ios::binary);
        f.write("junk", 4);
    }
    CHECK_THROWS_AS(io::load_matrix(dir.file("long.bin")), ParseError);

    CHECK_THROWS_AS(io::load_matrix(dir.file("missing.bin")), ParseError);
}

TEST_CASE("signal CSV round-trips exactly") {
    TempDir dir;
    std::mt19937_64 rng(23);
    ComplexVector s = oracle::random_vector(11, rng);
    io::save_signal_csv(s, dir.file("s.csv"), "signal");
    ComplexVector back = io::load_signal_csv(dir.file("s.csv"));
    REQUIRE(back.size() == s.size());
    CHECK((back - s).norm() == 0.0);
}

TEST_CASE("signal CSV loader rejects gaps and garbage") {
    TempDir dir;
    {
        std::ofstream out(dir.file("gap.csv"));
        out << "index,real,imag\n0,1.0,0.0\n2,1.0,0.0\n";
    }
    CHECK_THROWS_AS(io::load_signal_csv(dir.file("gap.csv")), ParseError);
    {
        std::ofstream out(dir.file("bad.csv"));
        out << "index,real,imag\n0,one,0.0\n";
    }
    CHECK_THROWS_AS(io::load_signal_csv(dir.file("bad.csv")), ParseError);
}

TEST_CASE("matrix CSV carries the schema comment and every entry") {
    TempDir dir;
    std::mt19937_64 rng(24);
    ComplexMatrix M = oracle::random_matrix(4, 5, rng);
    io::save_matrix_csv(M, dir.file("m.csv"), "basis");

    std::ifstream in(dir.file("m.csv"));
    std::string first;
    std::getline(in, first);
    CHECK(first == "# schema: stablegft.basis.v1");
    std::string header;
    std::getline(in, header);
    CHECK(header == "i,j,re,im");
    std::int64_t rows = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty()) {
            ++rows;
        }
    }
    CHECK(rows == 20);
}

}  // TEST_SUITE
