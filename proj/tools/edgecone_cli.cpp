#include "edgecone/edgecone.h"

#include <CLI11.hpp>

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Options {
    std::string input;
    std::string format = "json";
    int dim = 2;
    std::string degree;
    std::string svg;
    std::string dot;
    int search_bound = 2;
};

class Failure {
public:
    Failure(int code, std::string message) : code(code), message(std::move(message)) {}
    int code;
    std::string message;
};

int exit_code(ec_status s)
{
    switch (s) {
    case EC_OK:
        return 0;
    case EC_PARSE_ERROR:
    case EC_INVALID_ARGUMENT:
        return 1;
    case EC_PRECONDITION:
    case EC_LIMIT:
        return 2;
    case EC_INTERNAL:
        break;
    }
    return 3;
}

void check(ec_status s)
{
    if (s != EC_OK)
        throw Failure(exit_code(s), ec_last_error());
}

std::string read_input(const std::string& path)
{
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in)
        throw Failure(1, "cannot read " + path);
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const char* text)
{
    std::ofstream out(path);
    if (!out || !(out << text))
        throw Failure(1, "cannot write " + path);
}

std::vector<long long> parse_degree(const std::string& text)
{
    if (text.empty())
        throw Failure(1, "a degree is required (--degree a,b,...)");
    std::vector<long long> out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        long long x = 0;
        auto [end, err] = std::from_chars(item.data(), item.data() + item.size(), x);
        if (err != std::errc() || end != item.data() + item.size())
            throw Failure(1, "bad degree entry '" + item + "'");
        out.push_back(x);
    }
    return out;
}

class Owned {
public:
    ~Owned() { ec_string_free(p); }
    char** out() { return &p; }
    const char* get() const { return p ? p : ""; }

private:
    char* p = nullptr;
};

class Input {
public:
    explicit Input(const std::string& text)
    {
        if (ec_input_is_cone(text.c_str()))
            check(ec_cone_parse(text.c_str(), &cone));
        else
            check(ec_graph_parse(text.c_str(), &graph));
    }
    ~Input()
    {
        ec_graph_free(graph);
        ec_cone_free(cone);
    }
    ec_graph* need_graph(const std::string& command) const
    {
        if (!graph)
            throw Failure(1, command + " needs a graph input");
        return graph;
    }

    ec_graph* graph = nullptr;
    ec_cone* cone = nullptr;
};

int oracle_limit()
{
    const char* env = std::getenv("EDGECONE_ORACLE_LIMIT");
    if (!env)
        return 10;
    int v = 0;
    std::string s(env);
    auto [end, err] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (err != std::errc() || end != s.data() + s.size() || v < 1)
        throw Failure(1, "EDGECONE_ORACLE_LIMIT must be a positive integer");
    return v;
}

void run(const std::string& command, const Options& o)
{
    Input in(read_input(o.input));
    ec_format f = o.format == "table" ? EC_TABLE : EC_JSON;
    Owned out;
    if (command == "info") {
        check(ec_graph_info(in.need_graph(command), f, out.out()));
    } else if (command == "faces") {
        check(ec_graph_faces(in.need_graph(command), o.dim, f, out.out()));
    } else if (command == "pairs") {
        check(ec_graph_pairs(in.need_graph(command), f, out.out()));
    } else if (command == "t1") {
        std::vector<long long> d = parse_degree(o.degree);
        if (in.graph)
            check(ec_graph_t1(in.graph, d.data(), d.size(), f, out.out()));
        else
            check(ec_cone_t1(in.cone, d.data(), d.size(), f, out.out()));
    } else if (command == "crosscut") {
        std::vector<long long> d = parse_degree(o.degree);
        Owned dot, svg;
        char** want_dot = o.dot.empty() ? nullptr : dot.out();
        char** want_svg = o.svg.empty() ? nullptr : svg.out();
        if (in.graph)
            check(ec_graph_crosscut(in.graph, d.data(), d.size(), f, out.out(), want_dot, want_svg));
        else
            check(ec_cone_crosscut(in.cone, d.data(), d.size(), f, out.out(), want_dot, want_svg));
        if (want_dot)
            write_file(o.dot, dot.get());
        if (want_svg)
            write_file(o.svg, svg.get());
    } else if (command == "rigidity") {
        check(ec_graph_rigidity(in.need_graph(command), o.search_bound, f, out.out()));
    } else if (command == "oracle-check") {
        check(ec_graph_oracle_check(in.need_graph(command), oracle_limit(), f, out.out()));
    } else if (command == "export-cone") {
        check(ec_graph_export_cone(in.need_graph(command), out.out()));
    }
    std::fputs(out.get(), stdout);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"edge cones of bipartite graphs, their faces and deformations"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* sub) {
        sub->add_option("input", o.input, "graph (JSON or text) or cone JSON, '-' for stdin")->required();
        sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "table"}));
    };
    common(app.add_subcommand("info", "vertex classes, dimensions and extremal rays"));
    auto faces = app.add_subcommand("faces", "faces of the edge cone of a given dimension");
    common(faces);
    faces->add_option("--dim", o.dim, "face dimension")->check(CLI::IsMember({2, 3}));
    common(app.add_subcommand("pairs", "classification of all pairs of extremal rays"));
    auto t1 = app.add_subcommand("t1", "dimension of T1 in a degree");
    common(t1);
    t1->add_option("--degree", o.degree, "comma separated degree")->required();
    auto cross = app.add_subcommand("crosscut", "compact part of the crosscut in a degree");
    common(cross);
    cross->add_option("--degree", o.degree, "comma separated degree")->required();
    cross->add_option("--svg", o.svg, "write an SVG picture");
    cross->add_option("--dot", o.dot, "write a DOT graph");
    auto rig = app.add_subcommand("rigidity", "rigidity verdict with certificate");
    common(rig);
    rig->add_option("--search-bound", o.search_bound, "coordinate bound of the degree search")
        ->check(CLI::PositiveNumber);
    common(app.add_subcommand("oracle-check", "cross-validate graph predicates against the cone oracle"));
    common(app.add_subcommand("export-cone", "print the edge cone as cone JSON"));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }
    try {
        run(app.get_subcommands().front()->get_name(), o);
    } catch (const Failure& f) {
        std::cerr << "error: " << f.message << "\n";
        return f.code;
    }
    return 0;
}
