#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

const std::string kCli = DISKISO_CLI;
const std::string kData = DISKISO_DATA;

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args) {
    const fs::path log = fs::temp_directory_path() / ("diskiso_cli_" + std::to_string(::getpid()) + ".log");
    const std::string cmd = kCli + " " + args + " > " + log.string() + " 2>&1";
    const int status = std::system(cmd.c_str());
    std::ifstream in(log);
    std::stringstream buf;
    buf << in.rdbuf();
    fs::remove(log);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, buf.str()};
}

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("diskiso_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    return dir / name;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_CASE("gen") {
    const auto out = scratch("gen.json");
    CHECK(run("gen --n 20 --k 4 --box 10 --seed 1 --out " + out.string()).code == 0);
    CHECK(fs::exists(out));
    const auto again = scratch("gen2.json");
    CHECK(run("gen --n 20 --k 4 --box 10 --seed 1 --out " + again.string()).code == 0);
    CHECK(slurp(out) == slurp(again));
    CHECK(run("gen --n 3 --k 2 --box 1000 --seed 1 --out " + scratch("none.json").string()).code == 2);
}

TEST_CASE("solve") {
    const auto json = scratch("ring.out.json");
    const auto svg = scratch("ring.svg");
    const auto r = run("solve --in " + kData + "/ring3.json --out-json " + json.string() + " --out-svg " + svg.string());
    CHECK(r.code == 0);
    const std::string doc = slurp(json);
    CHECK(doc.find("\"size\": 3") != std::string::npos);
    CHECK(doc.find("\"verified\": true") != std::string::npos);
    CHECK(slurp(svg).find("</svg>") != std::string::npos);

    const auto single = run("solve --in " + kData + "/singleton.json");
    CHECK(single.code == 0);
    CHECK(single.out.find("\"size\": 0") != std::string::npos);

    const auto corrupt = scratch("corrupt.json");
    std::ofstream(corrupt) << "{\"disks\": [ {\"id\": 0, ";
    const auto bad = run("solve --in " + corrupt.string());
    CHECK(bad.code == 1);
    CHECK(bad.out.find("ParseError") != std::string::npos);

    const auto tp = run("solve --in " + kData + "/ring4.json --two-point 0 1");
    CHECK(tp.code == 0);
    CHECK(tp.out.find("\"size\": 4") != std::string::npos);
}

TEST_CASE("oracle") {
    auto r = run("oracle --in " + kData + "/ring3.json");
    CHECK(r.code == 0);
    CHECK(r.out.find("size 3") != std::string::npos);
    r = run("oracle --in " + kData + "/ring4.json");
    CHECK(r.code == 0);
    CHECK(r.out.find("size 4") != std::string::npos);

    // 25 disks in a row with one point: valid, but too large for the oracle.
    const auto big = scratch("big.json");
    {
        std::ofstream out(big);
        out << "{\"disks\": [";
        for (int i = 0; i < 25; ++i) out << (i ? "," : "") << "{\"id\":" << i << ",\"cx\":" << 3 * i << ",\"cy\":0,\"r\":1}";
        out << "], \"points\": [{\"x\": 0, \"y\": 5}]}";
    }
    CHECK(run("oracle --in " + big.string() + " --max-n 20").code == 4);
}

TEST_CASE("verify") {
    CHECK(run("verify --in " + kData + "/ring3.json --ids 0,1,2").code == 0);
    CHECK(run("verify --in " + kData + "/ring3.json --ids 0,1").code == 5);
    CHECK(run("verify --in " + kData + "/ring3.json").code == 5);
}

TEST_CASE("ratio") {
    const auto csv = scratch("ratio.csv");
    fs::remove(csv);
    CHECK(run("ratio --trials 0 --n 10 --k 2 --box 4 --seed0 1 --out-csv " + csv.string()).code == 0);
    CHECK(slurp(csv) == "instance,n,k,alg_size,opt_size,ratio,ms\n");

    const auto csv30 = scratch("ratio30.csv");
    fs::remove(csv30);
    CHECK(run("ratio --trials 2 --n 30 --k 2 --box 7 --seed0 1 --out-csv " + csv30.string()).code == 0);
    std::ifstream in(csv30);
    std::string line;
    std::getline(in, line);
    int rows = 0;
    while (std::getline(in, line)) {
        ++rows;
        CHECK(line.find(",,,") != std::string::npos);  // opt and ratio blank
    }
    CHECK(rows == 2);
}

TEST_CASE("usage errors") {
    CHECK(run("solve").code == 1);
    CHECK(run("frobnicate").code == 1);
}
