// bedcheck COMMAND [DOCUMENT] [flags]
#include "bed/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::vector<std::string> split(const std::string& s)
{
    std::vector<std::string> out;
    std::stringstream in(s);
    for (std::string part; std::getline(in, part, ',');)
        if (!part.empty()) out.push_back(part);
    return out;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Checks elementary doctrines over finite charts"};
    std::string command, path, fixture, object, feet, out, against, format = "text";
    int max_len = 0;
    app.add_option("command", command, "one of: validate check-biased check-strict rbp pi strict-fiber strictify "
                                       "complete flags-of-quotient left-covering lift commute-slice per exact-compare equiv")
        ->required();
    app.add_option("document", path, "document file; '-' reads standard input");
    auto* len_opt = app.add_option("--max-len", max_len, "truncation bound for lists (default 2)")->check(CLI::PositiveNumber);
    app.add_option("--fixture", fixture, "built-in fixture instead of a document");
    app.add_option("--object", object, "object for commute-slice");
    app.add_option("--feet", feet, "comma separated objects for pi and strict-fiber");
    app.add_option("--against", against, "fixture compared by equiv");
    app.add_option("--out", out, "write the report to a file");
    app.add_option("--format", format, "text or machine-readable")->check(CLI::IsMember({"text", "machine-readable"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    std::string echo = "bedcheck " + command;
    for (int i = 2; i < argc; ++i) echo += std::string(" ") + argv[i];

    try {
        std::optional<bed::Resolved> doc;
        if (!fixture.empty() && !path.empty()) throw bed::InputError("give either a document or --fixture, not both");
        if (!fixture.empty()) {
            try {
                doc = bed::resolve_fixture(fixture);
            } catch (const std::invalid_argument& e) {
                throw bed::InputError(e.what());
            }
        } else {
            if (path.empty()) throw bed::InputError("a document or --fixture is required");
            std::stringstream text;
            if (path == "-") {
                text << std::cin.rdbuf();
            } else {
                std::ifstream f(path);
                if (!f) throw bed::InputError("cannot read " + path);
                text << f.rdbuf();
            }
            auto parsed = bed::parse_document(text.str());
            std::vector<bed::SourceError> errors = parsed.errors;
            if (parsed.doc) doc = bed::resolve(*parsed.doc, errors);
            if (!errors.empty()) {
                for (const auto& e : errors) std::cerr << path << ":" << bed::to_string(e) << "\n";
                return 2;
            }
        }
        bed::RunOptions opts;
        if (len_opt->count()) opts.max_len = max_len;
        if (!object.empty()) opts.object = object;
        if (!against.empty()) opts.against = against;
        opts.feet = split(feet);
        opts.echo = echo;
        if (doc->options.count("max-len") && !opts.max_len) {
            try {
                opts.max_len = std::stoi(doc->options.at("max-len"));
            } catch (const std::exception&) {
                throw bed::InputError("option max-len is not a number");
            }
        }

        bed::Report r = bed::run(command, *doc, opts);
        const std::string s = format == "text" ? r.text() : r.machine();
        if (out.empty()) {
            std::cout << s;
        } else {
            std::ofstream f(out, std::ios::binary);
            if (!f) throw bed::InputError("cannot write " + out);
            f << s;
        }
        return bed::exit_status(r);
    } catch (const bed::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
