#include <httplib.h>

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <regex>

#include "rph/error.hpp"
#include "rph/pdb.hpp"

namespace rph {

namespace {

constexpr const char* kDefaultBase = "https://files.rcsb.org/download";

struct Url {
    std::string origin;  // scheme://host[:port]
    std::string path;    // without trailing slash
};

Url split_base(const std::string& base) {
    static const std::regex re(R"(^(https?://[^/]+)(/.*)?$)");
    std::smatch m;
    if (!std::regex_match(base, m, re)) throw InputError("archive base URL must be http(s)://host[/path]: " + base);
    std::string path = m[2].str();
    while (!path.empty() && path.back() == '/') path.pop_back();
    return {m[1].str(), path};
}

}  // namespace

void fetch_structure(std::string_view id, const std::filesystem::path& destination) {
    if (!valid_pdb_id(id)) throw InputError("malformed structure id '" + std::string(id) + "'");
    std::string upper(id);
    for (char& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));

    const char* env = std::getenv("RPH_PDB_BASE_URL");
    const Url base = split_base(env && *env ? env : kDefaultBase);

    httplib::Client client(base.origin);
    client.set_connection_timeout(10);
    client.set_read_timeout(60);
    client.set_follow_location(true);
    const std::string target = base.path + "/" + upper + ".pdb";
    auto res = client.Get(target);
    if (!res) throw NetworkError("download of " + base.origin + target + " failed: " + httplib::to_string(res.error()));
    if (res->status != 200)
        throw NetworkError("download of " + base.origin + target + " returned HTTP " + std::to_string(res->status));

    const std::string& body = res->body;
    const bool has_atom = body.starts_with("ATOM  ") || body.find("\nATOM  ") != std::string::npos;
    if (body.empty() || !has_atom) throw DataError("payload for " + upper + " has no ATOM records");

    auto tmp = destination;
    tmp += ".part";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out.write(body.data(), static_cast<std::streamsize>(body.size()));
        if (!out) {
            out.close();
            std::filesystem::remove(tmp);
            throw InputError("cannot write '" + tmp.string() + "'");
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, destination, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw InputError("cannot move download to '" + destination.string() + "': " + ec.message());
    }
}

}  // namespace rph
