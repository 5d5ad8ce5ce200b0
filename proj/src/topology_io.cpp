#include "dices/topology_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace dices {

using nlohmann::json;

Network parse_topology(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("topology is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("switches") || !doc.contains("links")) {
    throw std::invalid_argument("topology needs 'switches' and 'links'");
  }
  try {
    std::vector<std::string> switches = doc.at("switches").get<std::vector<std::string>>();
    std::vector<LinkSpec> links;
    for (const auto& entry : doc.at("links")) {
      LinkSpec spec;
      spec.from = entry.at("from").get<std::string>();
      spec.to = entry.at("to").get<std::string>();
      spec.bandwidth_mbps = entry.at("bandwidth_mbps").get<std::int64_t>();
      spec.delay_ms = entry.at("delay_ms").get<std::int64_t>();
      if (entry.contains("id")) spec.id = entry.at("id").get<std::string>();
      links.push_back(std::move(spec));
    }
    return Network(std::move(switches), std::move(links));
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed topology: ") + e.what());
  }
}

Network load_topology(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::invalid_argument("cannot open topology file " + file.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_topology(buffer.str());
}

std::string dump_topology(const Network& network) {
  json doc;
  doc["switches"] = std::vector<std::string>(network.switch_names().begin(),
                                             network.switch_names().end());
  json links = json::array();
  for (const auto& link : network.links()) {
    json entry;
    entry["from"] = network.switch_name(link.from);
    entry["to"] = network.switch_name(link.to);
    entry["bandwidth_mbps"] = link.bandwidth_mbps;
    entry["delay_ms"] = link.delay_ms;
    if (link.id != network.switch_name(link.from) + "-" + network.switch_name(link.to)) {
      entry["id"] = link.id;
    }
    links.push_back(std::move(entry));
  }
  doc["links"] = std::move(links);
  return doc.dump(2) + "\n";
}

}  // namespace dices
