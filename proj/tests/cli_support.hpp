#pragma once

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace cli {

struct Result {
    int code = -1;
    std::string out;
};

inline std::string quote(const std::string& s)
{
    std::string out = "'";
    for (char c : s) {
        if (c == '\'')
            out += "'\\''";
        else
            out += c;
    }
    return out + "'";
}

// runs a shell command line, stderr discarded
inline Result run(const std::string& line)
{
    Result r;
    FILE* p = popen((line + " 2>/dev/null").c_str(), "r");
    if (!p)
        return r;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0)
        r.out.append(buf.data(), got);
    int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

inline std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct Entry {
    std::filesystem::path input;
    std::string degree;
    bool cone = false;
};

inline std::vector<Entry> corpus(const std::filesystem::path& dir)
{
    std::vector<Entry> out;
    std::istringstream in(slurp(dir / "corpus.txt"));
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        std::istringstream ls(line);
        Entry e;
        std::string name;
        ls >> name >> e.degree;
        e.input = dir / name;
        e.cone = slurp(e.input).find("ambient_dim") != std::string::npos;
        out.push_back(e);
    }
    return out;
}

// every applicable subcommand for an entry, without the binary and input
inline std::vector<std::string> commands(const Entry& e)
{
    std::vector<std::string> out;
    for (std::string fmt : {"json", "table"}) {
        std::string f = " --format " + fmt;
        out.push_back("t1 --degree " + e.degree + f);
        out.push_back("crosscut --degree " + e.degree + f);
        if (e.cone)
            continue;
        out.push_back("info" + f);
        out.push_back("faces --dim 2" + f);
        out.push_back("faces --dim 3" + f);
        out.push_back("pairs" + f);
        out.push_back("rigidity" + f);
        out.push_back("oracle-check" + f);
    }
    if (!e.cone)
        out.push_back("export-cone");
    return out;
}

class TempDir {
public:
    TempDir()
    {
        std::string tmpl = (std::filesystem::temp_directory_path() / "edgecone.XXXXXX").string();
        if (mkdtemp(tmpl.data()))
            path = tmpl;
    }
    ~TempDir()
    {
        std::error_code ec;
        if (!path.empty())
            std::filesystem::remove_all(path, ec);
    }
    std::filesystem::path path;
};

// output of one command followed by any DOT and SVG files it wrote
inline Result run_with_files(const std::string& binary, const Entry& e, const std::string& args,
                             const TempDir& tmp)
{
    std::string line = quote(binary) + " " + args.substr(0, args.find(' ')) + " " + quote(e.input.string());
    std::string rest = args.find(' ') == std::string::npos ? "" : args.substr(args.find(' '));
    bool files = args.rfind("crosscut", 0) == 0;
    auto dot = tmp.path / "q.dot", svg = tmp.path / "q.svg";
    if (files)
        rest += " --dot " + quote(dot.string()) + " --svg " + quote(svg.string());
    Result r = run(line + rest);
    if (files && r.code == 0) {
        r.out += slurp(dot);
        r.out += slurp(svg);
        std::filesystem::remove(dot);
        std::filesystem::remove(svg);
    }
    return r;
}

} // namespace cli
