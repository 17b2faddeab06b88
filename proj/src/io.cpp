#include "causetq/io.hpp"

#include <charconv>
#include <fstream>

#include "json.hpp"

namespace causetq {

namespace {

nlohmann::json read_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path.string());
    nlohmann::json j;
    in >> j;
    return j;
}

void write_json(const std::filesystem::path& path, const nlohmann::json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open file for writing: " + path.string());
    out << j.dump(1) << '\n';
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

nlohmann::json chain_to_json(const ObserverChain& chain) {
    return nlohmann::json{{"events", chain.events()}, {"valuations", chain.valuations()}};
}

ObserverChain chain_from_json(const nlohmann::json& j, const CausalSet& cs) {
    return ObserverChain(cs, j.at("events").get<std::vector<EventId>>(),
                         j.at("valuations").get<std::vector<long long>>());
}

}  // namespace

LoadedCauset load_causet_json(const std::filesystem::path& path) {
    const nlohmann::json j = read_json(path);
    const auto event_count = j.at("event_count").get<std::uint32_t>();
    std::vector<IdPair> relations;
    for (const auto& pair : j.at("relations")) {
        if (!pair.is_array() || pair.size() != 2)
            throw std::runtime_error("relations entries must be [a, b] pairs");
        relations.emplace_back(pair[0].get<EventId>(), pair[1].get<EventId>());
    }

    LoadedCauset loaded{CausalSet::build(event_count, relations), 0, {}};
    if (j.contains("embedding")) {
        const auto& embedding = j.at("embedding");
        if (embedding.size() != event_count)
            throw std::runtime_error("embedding size must equal event_count");
        for (const auto& coords : embedding) {
            if (coords.size() != 2 && coords.size() != 3)
                throw std::runtime_error("embedding entries must be [t,x] or [t,x,y]");
            if (loaded.embedding_dimension == 0)
                loaded.embedding_dimension = static_cast<int>(coords.size());
            else if (loaded.embedding_dimension != static_cast<int>(coords.size()))
                throw std::runtime_error("embedding dimension must be uniform");
            MinkowskiPoint p;
            p.t = coords[0].get<double>();
            p.x = coords[1].get<double>();
            if (coords.size() == 3) p.y = coords[2].get<double>();
            loaded.embedding.push_back(p);
        }
    }
    return loaded;
}

void save_causet_json(const std::filesystem::path& path, const CausalSet& cs) {
    nlohmann::json j;
    j["event_count"] = cs.size();
    auto& relations = j["relations"] = nlohmann::json::array();
    for (const auto& [a, b] : cs.covers()) relations.push_back({a, b});
    write_json(path, j);
}

void save_causet_json(const std::filesystem::path& path, const EmbeddedCauset& ec) {
    nlohmann::json j;
    const CausalSet& cs = ec.causet();
    j["event_count"] = cs.size();
    auto& relations = j["relations"] = nlohmann::json::array();
    for (const auto& [a, b] : cs.covers()) relations.push_back({a, b});
    auto& embedding = j["embedding"] = nlohmann::json::array();
    for (EventId e = 0; e < cs.size(); ++e) {
        const MinkowskiPoint& p = ec.point(e);
        if (ec.dimension() == 2)
            embedding.push_back({p.t, p.x});
        else
            embedding.push_back({p.t, p.x, p.y});
    }
    write_json(path, j);
}

ObserverChain load_chain_json(const std::filesystem::path& path, const CausalSet& cs) {
    return chain_from_json(read_json(path), cs);
}

void save_chain_json(const std::filesystem::path& path, const ObserverChain& chain) {
    write_json(path, chain_to_json(chain));
}

Frame load_frame_json(const std::filesystem::path& path, const CausalSet& cs) {
    const nlohmann::json j = read_json(path);
    return Frame::make(cs, chain_from_json(j.at("P"), cs), chain_from_json(j.at("Q"), cs));
}

void save_frame_json(const std::filesystem::path& path, const ObserverChain& P,
                     const ObserverChain& Q) {
    write_json(path, nlohmann::json{{"P", chain_to_json(P)}, {"Q", chain_to_json(Q)}});
}

std::string format_double(double value) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, ptr);
}

void write_quantify_csv(const std::filesystem::path& path,
                        const std::vector<QuantRow>& rows) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open file for writing: " + path.string());
    out << "event_id,p,q,t,x,scalar,class\n";
    for (const QuantRow& row : rows) {
        out << row.event_id << ',' << format_double(row.pair.p) << ','
            << format_double(row.pair.q) << ',' << format_double(row.coords.t) << ','
            << format_double(row.coords.x) << ',' << format_double(row.scalar) << ','
            << to_string(row.cls) << '\n';
    }
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

std::string frame_relation_json(const FrameRelation& r) {
    nlohmann::json j{{"m", r.m},
                     {"n", r.n},
                     {"rho", r.rho},
                     {"beta", r.beta},
                     {"gamma", Boost::from_rho(r.rho).gamma},
                     {"sigma", r.sigma},
                     {"m_variance", r.m_variance},
                     {"n_variance", r.n_variance}};
    return j.dump(1);
}

}  // namespace causetq
