// gasledger: Ethereum data-storage gas cost model
// Copyright 2026 The gasledger Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gasledger/abi.hpp>
#include <gasledger/cli.hpp>
#include <gasledger/content_address.hpp>
#include <gasledger/errors.hpp>
#include <gasledger/estimators.hpp>
#include <gasledger/input.hpp>
#include <gasledger/report.hpp>
#include <gasledger/storage_layout.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iterator>
#include <ostream>

namespace gasledger::cli
{
namespace
{
using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

enum class Format
{
    Table,
    Json,
    Csv,
};

/// Flags shared by every subcommand that prices something.
struct CommonOptions
{
    std::string fork;
    std::string format = "table";
    gas_t block_gas_limit = default_block_gas_limit;
    gas_t overhead = 0;
    bool net = false;
};

struct InputOptions
{
    std::string size;
    std::string file;
    std::string fill = "ascii";
};

void add_common(CLI::App* cmd, CommonOptions& o, bool pricing = true)
{
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"table", "json", "csv"}));
    if (!pricing)
        return;
    cmd->add_option("--fork", o.fork, "pre-berlin | berlin (default: $GASLEDGER_FORK, else berlin)");
    cmd->add_option("--block-gas-limit", o.block_gas_limit, "Block gas limit")->capture_default_str();
    cmd->add_option("--overhead", o.overhead, "Unmodeled execution overhead added to contract calls");
    cmd->add_flag("--net", o.net, "Show net gas after capped refunds (table output)");
}

void add_input(CLI::App* cmd, InputOptions& o)
{
    auto* size = cmd->add_option("--size", o.size, "Synthetic input size, e.g. 946, 12kb, 16mb");
    auto* file = cmd->add_option("--input", o.file, "Read the payload from a file");
    size->excludes(file);
    cmd->add_option("--fill", o.fill, "ascii | zero | random:SEED");
}

Fork resolve_fork(const std::string& flag)
{
    std::string name = flag;
    if (name.empty())
    {
        const char* env = std::getenv("GASLEDGER_FORK");
        name = env != nullptr && *env != '\0' ? env : "berlin";
    }
    const auto fork = parse_fork(name);
    if (!fork)
        throw UsageError{"unknown fork '" + name + "' (expected pre-berlin or berlin)"};
    return *fork;
}

Format resolve_format(const std::string& f)
{
    if (f == "json")
        return Format::Json;
    if (f == "csv")
        return Format::Csv;
    return Format::Table;
}

EstimatorOptions estimator_options(const CommonOptions& o)
{
    return {.block_gas_limit = o.block_gas_limit, .execution_overhead = o.overhead};
}

bytes load_input(const InputOptions& o)
{
    if (o.size.empty() == o.file.empty())
        throw UsageError{"exactly one of --size or --input is required"};
    if (!o.file.empty())
    {
        std::ifstream in{o.file, std::ios::binary};
        if (!in)
            throw IoError{"cannot read input file '" + o.file + "'"};
        return {std::istreambuf_iterator<char>{in}, std::istreambuf_iterator<char>{}};
    }
    const auto size = parse_size(o.size);
    if (!size)
        throw UsageError{"invalid size '" + o.size + "'"};
    const auto fill = FillSpec::parse(o.fill);
    if (!fill)
        throw UsageError{"invalid fill '" + o.fill + "' (expected ascii, zero or random:SEED)"};
    return synthesize_input(*size, *fill);
}

Selector parse_selector(const std::string& hex)
{
    bytes b;
    try
    {
        b = from_hex(hex);
    }
    catch (const std::invalid_argument&)
    {
        throw UsageError{"invalid selector '" + hex + "'"};
    }
    if (b.size() != 4)
        throw UsageError{"selector must be 4 bytes: '" + hex + "'"};
    return {b[0], b[1], b[2], b[3]};
}

/// Converts one JSON argument to the declared ABI type.
AbiValue value_from_json(const json& v, abi::Type t)
{
    const auto mismatch = [&] {
        return DomainError{ErrorCode::TypeMismatch, v.dump() + " is not a valid " + std::string{abi::type_name(t)}};
    };
    switch (t)
    {
    case abi::Type::Uint256:
        if (v.is_number_unsigned())
            return abi::Uint256{v.get<uint64_t>()};
        if (v.is_string())
        {
            try
            {
                return abi::Uint256{uint256{v.get<std::string>()}};
            }
            catch (const std::exception&)
            {
                throw mismatch();
            }
        }
        throw mismatch();
    case abi::Type::Bool:
        if (!v.is_boolean())
            throw mismatch();
        return abi::Bool{v.get<bool>()};
    case abi::Type::Address:
    {
        if (!v.is_string())
            throw mismatch();
        bytes b;
        try
        {
            b = from_hex(v.get<std::string>());
        }
        catch (const std::invalid_argument&)
        {
            throw mismatch();
        }
        if (b.size() != 20)
            throw mismatch();
        abi::Address a;
        std::copy(b.begin(), b.end(), a.value.begin());
        return a;
    }
    case abi::Type::String:
        if (!v.is_string())
            throw mismatch();
        return abi::String{v.get<std::string>()};
    case abi::Type::Bytes:
        if (!v.is_string())
            throw mismatch();
        try
        {
            return abi::Bytes{from_hex(v.get<std::string>())};
        }
        catch (const std::invalid_argument&)
        {
            throw mismatch();
        }
    }
    throw mismatch();
}

std::vector<AbiValue> args_from_json(const std::string& text, const FunctionSignature& sig)
{
    json arr;
    try
    {
        arr = json::parse(text.empty() ? "[]" : text);
    }
    catch (const json::parse_error& e)
    {
        throw UsageError{std::string{"--args is not valid JSON: "} + e.what()};
    }
    if (!arr.is_array())
        throw UsageError{"--args must be a JSON array"};
    if (arr.size() > max_function_parameters)
        throw DomainError{ErrorCode::TooManyParameters, std::to_string(arr.size()) + " arguments; at most 16"};
    if (arr.size() != sig.param_types.size())
        throw DomainError{ErrorCode::TypeMismatch, "expected " + std::to_string(sig.param_types.size()) +
                                                       " arguments for " + sig.canonical()};
    std::vector<AbiValue> out;
    for (size_t i = 0; i < arr.size(); ++i)
        out.push_back(value_from_json(arr[i], abi::parse_type(sig.param_types[i])));
    return out;
}

void print_estimates(std::ostream& out, std::span<const Estimate> estimates, const CommonOptions& o, Fork fork)
{
    switch (resolve_format(o.format))
    {
    case Format::Json:
        write_json(out, estimates, fork);
        break;
    case Format::Csv:
        write_csv(out, estimates);
        break;
    case Format::Table:
        write_table(out, estimates, o.net);
        break;
    }
}

// ------------------------------------------------------------------ estimate

struct EstimateArgs
{
    CommonOptions common;
    InputOptions input;
    std::string method;
    std::string variant = "indexed";
    std::string target = "eoa";
    std::string old_size;
    bool with_event = false;
    std::string sig;
    std::string args;
    std::string platform = "swarm";
    std::string anchor = "sc-storage";
    std::vector<std::string> selectors;
    bool no_fallback = false;
};

void run_estimate(const EstimateArgs& a, std::ostream& out)
{
    const auto fork = resolve_fork(a.common.fork);
    const auto opts = estimator_options(a.common);

    Estimate e;
    if (a.method == "unused-param" && !a.sig.empty())
    {
        // Explicit typed arguments; --sig supplies the parameter types.
        const auto sig = FunctionSignature::parse(a.sig);
        const auto values = args_from_json(a.args, sig);
        auto cfg = contracts::single_function(contracts::unused_param_function(values));
        if (!a.selectors.empty())
        {
            cfg.selectors.clear();
            for (const auto& s : a.selectors)
                cfg.selectors.push_back(parse_selector(s));
        }
        e = estimate_unused_param(values, a.with_event, cfg, fork, opts);
    }
    else
    {
        const auto data = load_input(a.input);
        if (a.method == "sc-store")
            e = estimate_sc_store(data, fork, opts);
        else if (a.method == "sc-update")
            e = estimate_sc_update(data, fork, opts);
        else if (a.method == "sc-grow")
        {
            uint64_t old_size = data.size() / 2;
            if (!a.old_size.empty())
            {
                const auto parsed = parse_size(a.old_size);
                if (!parsed)
                    throw UsageError{"invalid --old-size '" + a.old_size + "'"};
                old_size = *parsed;
            }
            e = estimate_sc_grow(old_size, data, fork, opts);
        }
        else if (a.method == "event")
        {
            const auto v = parse_event_variant(a.variant);
            if (!v)
                throw UsageError{"unknown event variant '" + a.variant + "'"};
            e = estimate_event(*v, data, fork, opts);
        }
        else if (a.method == "tx-payload")
        {
            auto cfg = contracts::fallback_contract();
            if (!a.selectors.empty())
            {
                cfg.selectors.clear();
                for (const auto& s : a.selectors)
                    cfg.selectors.push_back(parse_selector(s));
            }
            cfg.has_fallback = !a.no_fallback;
            e = estimate_tx_payload(
                data, a.target == "contract" ? PayloadTarget::EoaToContract : PayloadTarget::EoaToEoa, cfg, fork, opts);
        }
        else if (a.method == "unused-param")
        {
            const std::vector<AbiValue> values{abi::String{{data.begin(), data.end()}}};
            auto cfg = contracts::single_function(contracts::unused_param_function(values));
            e = estimate_unused_param(values, a.with_event, cfg, fork, opts);
        }
        else if (a.method == "hybrid")
        {
            const auto p = parse_hybrid_platform(a.platform);
            const auto anchor = parse_anchor(a.anchor);
            if (!p)
                throw UsageError{"unknown hybrid platform '" + a.platform + "'"};
            if (!anchor)
                throw UsageError{"unknown anchor '" + a.anchor + "'"};
            e = estimate_hybrid(data, *p, *anchor, fork, opts);
        }
    }
    print_estimates(out, std::span{&e, 1}, a.common, fork);
}

// ------------------------------------------------------------------ compare

struct CompareArgs
{
    CommonOptions common;
    std::string sizes = "1b..12kb:14";
    std::vector<std::string> strategies;
    std::string fill = "ascii";
    std::string anchor = "sc-storage";
    bool encrypted = false;
    int cid_version = 0;
};

void write_compare_table(std::ostream& out, const ComparisonReport& r)
{
    out << "fork: " << to_string(r.fork) << "\n" << std::setw(10) << "size";
    for (const auto s : r.strategies)
        out << std::setw(static_cast<int>(std::max<size_t>(12, to_string(s).size() + 2))) << to_string(s);
    out << "  cheapest\n";
    for (size_t i = 0; i < r.sizes.size(); ++i)
    {
        out << std::setw(10) << r.sizes[i];
        for (size_t s = 0; s < r.strategies.size(); ++s)
        {
            const auto& e = r.at(s, i);
            const auto width = static_cast<int>(std::max<size_t>(12, to_string(e.strategy).size() + 2));
            out << std::setw(width) << (std::to_string(e.gas_total) + (e.exceeds_block_limit ? "!" : ""));
        }
        out << "  " << to_string(r.ranking(i).front()) << '\n';
    }
    out << "(! exceeds block gas limit)\n";
}

void run_compare(const CompareArgs& a, std::ostream& out)
{
    const auto fork = resolve_fork(a.common.fork);
    const auto sizes = parse_size_range(a.sizes);
    if (!sizes)
        throw UsageError{"invalid --sizes '" + a.sizes + "' (expected A..B:N or a single size)"};

    std::vector<StrategyKind> strategies;
    for (const auto& name : a.strategies)
    {
        const auto s = parse_strategy(name);
        if (!s)
            throw UsageError{"unknown strategy '" + name + "'"};
        strategies.push_back(*s);
    }
    if (strategies.empty())
        strategies.assign(std::begin(all_strategies), std::end(all_strategies));

    const auto fill = FillSpec::parse(a.fill);
    if (!fill)
        throw UsageError{"invalid fill '" + a.fill + "'"};
    const auto anchor = parse_anchor(a.anchor);
    if (!anchor)
        throw UsageError{"unknown anchor '" + a.anchor + "'"};

    const CompareOptions opts{
        .estimator = estimator_options(a.common),
        .fill = *fill,
        .hybrid_anchor = *anchor,
        .swarm_encrypted = a.encrypted,
        .cid_version = a.cid_version,
    };
    const auto report = compare(*sizes, strategies, fork, opts);
    switch (resolve_format(a.common.format))
    {
    case Format::Json:
        write_json(out, report);
        break;
    case Format::Csv:
        write_csv(out, report.cells);
        break;
    case Format::Table:
        write_compare_table(out, report);
        break;
    }
}

// ------------------------------------------------------------------ layout

struct LayoutArgs
{
    CommonOptions common;
    std::string slot = "0";
    std::string size;
};

void run_layout(const LayoutArgs& a, std::ostream& out)
{
    uint256 base;
    try
    {
        base = uint256{a.slot};
    }
    catch (const std::exception&)
    {
        throw UsageError{"invalid --slot '" + a.slot + "'"};
    }
    const auto size = parse_size(a.size);
    if (!size)
        throw UsageError{"invalid --size '" + a.size + "'"};

    const auto plan = layout_dynamic({base}, *size);
    if (resolve_format(a.common.format) == Format::Json)
    {
        json j;
        j["base_slot"] = plan.base_slot.hex();
        j["byte_length"] = plan.byte_length;
        j["in_place"] = plan.in_place;
        j["length_slot"] = plan.length_slot.hex();
        j["data_slot_count"] = plan.data_slots.size();
        j["touched_slots"] = plan.touched_slot_count();
        auto& slots = j["data_slots"] = json::array();
        for (const auto& s : plan.data_slots)
            slots.push_back(s.hex());
        out << j.dump(2) << '\n';
        return;
    }
    if (resolve_format(a.common.format) == Format::Csv)
    {
        out << "role,index,slot\nlength,0," << plan.length_slot.hex() << '\n';
        for (size_t i = 0; i < plan.data_slots.size(); ++i)
            out << "data," << i << ',' << plan.data_slots[i].hex() << '\n';
        return;
    }
    out << "base slot:     " << plan.base_slot.hex() << '\n'
        << "byte length:   " << plan.byte_length << '\n'
        << "in place:      " << (plan.in_place ? "yes" : "no") << '\n'
        << "length slot:   " << plan.length_slot.hex() << '\n'
        << "data slots:    " << plan.data_slots.size() << '\n'
        << "touched slots: " << plan.touched_slot_count() << '\n';
    for (size_t i = 0; i < plan.data_slots.size(); ++i)
        out << "  [" << i << "] " << plan.data_slots[i].hex() << '\n';
}

// ------------------------------------------------------------------ encode

struct EncodeArgs
{
    CommonOptions common;
    std::string sig;
    std::string args;
};

void run_encode(const EncodeArgs& a, std::ostream& out)
{
    const auto fork = resolve_fork(a.common.fork);
    const auto sig = FunctionSignature::parse(a.sig);
    const auto values = args_from_json(a.args, sig);
    const auto payload = encode_call(sig, values);
    const auto stats = payload_stats(payload);
    const auto gas = intrinsic_gas(stats, schedule_for(fork));
    const auto sel = selector(sig);

    switch (resolve_format(a.common.format))
    {
    case Format::Json:
    {
        json j;
        j["signature"] = sig.canonical();
        j["selector"] = "0x" + to_hex(sel);
        j["payload"] = "0x" + to_hex(payload);
        j["size_bytes"] = stats.size();
        j["zero_bytes"] = stats.zero_bytes;
        j["nonzero_bytes"] = stats.nonzero_bytes;
        j["fork"] = to_string(fork);
        j["intrinsic_gas"] = gas;
        out << j.dump(2) << '\n';
        break;
    }
    case Format::Csv:
        out << "signature,selector,size_bytes,zero_bytes,nonzero_bytes,fork,intrinsic_gas\n"
            << '"' << sig.canonical() << '"' << ",0x" << to_hex(sel) << ',' << stats.size() << ','
            << stats.zero_bytes << ',' << stats.nonzero_bytes << ',' << to_string(fork) << ',' << gas << '\n';
        break;
    case Format::Table:
        out << "signature:     " << sig.canonical() << '\n'
            << "selector:      0x" << to_hex(sel) << '\n'
            << "payload:       0x" << to_hex(payload) << '\n'
            << "bytes:         " << stats.size() << " (" << stats.zero_bytes << " zero, " << stats.nonzero_bytes
            << " non-zero)\n"
            << "intrinsic gas: " << gas << " (" << to_string(fork) << ")\n";
        break;
    }
}

// ------------------------------------------------------------------ chunk

struct ChunkArgs
{
    CommonOptions common;
    InputOptions input;
    std::string platform = "swarm";
    uint64_t chunk_size = 0;
    uint64_t fanout = 0;
    int cid_version = 0;
};

void run_chunk(const ChunkArgs& a, std::ostream& out)
{
    Platform platform;
    if (a.platform == "swarm")
        platform = Platform::Swarm;
    else if (a.platform == "swarm-encrypted")
        platform = Platform::SwarmEncrypted;
    else if (a.platform == "ipfs")
        platform = Platform::Ipfs;
    else
        throw UsageError{"unknown platform '" + a.platform + "'"};

    auto cfg = ChunkerConfig::defaults_for(platform);
    if (a.chunk_size != 0)
        cfg.chunk_size = a.chunk_size;
    if (a.fanout != 0)
        cfg.fanout = a.fanout;

    const auto data = load_input(a.input);
    const auto tree = build_tree(data, platform, cfg);
    const auto id = identifier_bytes(tree, a.cid_version);
    const auto text = platform == Platform::Ipfs ? make_cid(tree.root_id, a.cid_version).text() : to_hex(id);

    switch (resolve_format(a.common.format))
    {
    case Format::Json:
    {
        json j;
        j["platform"] = to_string(platform);
        j["size_bytes"] = data.size();
        j["chunk_size"] = cfg.chunk_size;
        j["fanout"] = cfg.fanout;
        j["root_hex"] = to_hex(tree.root_id);
        j["identifier_hex"] = to_hex(id);
        j["identifier_text"] = text;
        j["identifier_bytes"] = id.size();
        j["chunk_count"] = tree.chunk_count;
        j["node_count"] = tree.node_count;
        j["depth"] = tree.depth;
        if (platform == Platform::Ipfs)
            j["cid_version"] = a.cid_version;
        out << j.dump(2) << '\n';
        break;
    }
    case Format::Csv:
        out << "platform,size_bytes,chunk_size,fanout,chunk_count,node_count,depth,identifier_bytes,identifier\n"
            << to_string(platform) << ',' << data.size() << ',' << cfg.chunk_size << ',' << cfg.fanout << ','
            << tree.chunk_count << ',' << tree.node_count << ',' << tree.depth << ',' << id.size() << ',' << text
            << '\n';
        break;
    case Format::Table:
        out << "platform:         " << to_string(platform) << '\n'
            << "size:             " << data.size() << " bytes\n"
            << "chunker:          " << cfg.chunk_size << " B chunks, fanout " << cfg.fanout << '\n'
            << "identifier:       " << text << '\n'
            << "identifier bytes: " << id.size() << " (0x" << to_hex(id) << ")\n"
            << "chunks:           " << tree.chunk_count << '\n'
            << "nodes:            " << tree.node_count << '\n'
            << "depth:            " << tree.depth << '\n';
        break;
    }
}
}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"gasledger: gas cost of storing data on Ethereum, by strategy and fork", "gasledger"};
    app.require_subcommand(1);

    EstimateArgs est;
    auto* estimate = app.add_subcommand("estimate", "Estimate one storage strategy");
    add_common(estimate, est.common);
    add_input(estimate, est.input);
    estimate
        ->add_option("--method", est.method, "Strategy to price")
        ->required()
        ->check(CLI::IsMember({"sc-store", "sc-update", "sc-grow", "event", "tx-payload", "unused-param", "hybrid"}));
    estimate->add_option("--variant", est.variant, "event: indexed | non-indexed | anonymous-indexed");
    estimate->add_option("--target", est.target, "tx-payload: eoa | contract")
        ->check(CLI::IsMember({"eoa", "contract"}));
    estimate->add_option("--old-size", est.old_size, "sc-grow: size of the stored value (default: half)");
    estimate->add_flag("--with-event", est.with_event, "unused-param: emit an indexed id event");
    estimate->add_option("--sig", est.sig, "unused-param: parameter types as a signature, used with --args");
    estimate->add_option("--args", est.args, "unused-param: JSON array of arguments");
    estimate->add_option("--platform", est.platform, "hybrid: swarm | swarm-encrypted | ipfs-cidv0 | ipfs-cidv1");
    estimate->add_option("--anchor", est.anchor, "hybrid: sc-storage | event-log");
    estimate->add_option("--selectors", est.selectors, "Deployed selectors (hex), replacing the defaults")
        ->delimiter(',');
    estimate->add_flag("--no-fallback", est.no_fallback, "Target contract has no fallback function");

    CompareArgs cmp;
    auto* comp = app.add_subcommand("compare", "Compare strategies over a range of sizes");
    add_common(comp, cmp.common);
    comp->add_option("--sizes", cmp.sizes, "A..B:N or a single size")->capture_default_str();
    comp->add_option("--strategies", cmp.strategies, "Comma-separated strategy names (default: all)")
        ->delimiter(',');
    comp->add_option("--fill", cmp.fill, "ascii | zero | random:SEED");
    comp->add_option("--anchor", cmp.anchor, "Hybrid anchor: sc-storage | event-log");
    comp->add_flag("--encrypted", cmp.encrypted, "Hybrid Swarm uses encrypted references");
    comp->add_option("--cid-version", cmp.cid_version, "Hybrid IPFS CID version")->check(CLI::Range(0, 1));

    LayoutArgs lay;
    auto* layout = app.add_subcommand("layout", "Storage slots of a dynamic string/bytes value");
    add_common(layout, lay.common, false);
    layout->add_option("--slot", lay.slot, "Declared slot position p (decimal or 0x hex)");
    layout->add_option("--size", lay.size, "Value length in bytes")->required();

    EncodeArgs enc;
    auto* encode = app.add_subcommand("encode", "ABI-encode a call and price its calldata");
    add_common(encode, enc.common);
    encode->add_option("--sig", enc.sig, "Function signature, e.g. store(string)")->required();
    encode->add_option("--args", enc.args, "JSON array of arguments");

    ChunkArgs chk;
    auto* chunk = app.add_subcommand("chunk", "Chunk data and compute its content identifier");
    add_common(chunk, chk.common, false);
    add_input(chunk, chk.input);
    chunk->add_option("--platform", chk.platform, "swarm | swarm-encrypted | ipfs");
    chunk->add_option("--chunk-size", chk.chunk_size, "Override the chunk size");
    chunk->add_option("--fanout", chk.fanout, "Override links per intermediate node");
    chunk->add_option("--cid-version", chk.cid_version, "IPFS CID version")->check(CLI::Range(0, 1));

    std::vector<const char*> argv{"gasledger"};
    for (const auto& a : args)
        argv.push_back(a.c_str());

    try
    {
        app.parse(static_cast<int>(argv.size()), argv.data());
    }
    catch (const CLI::ParseError& e)
    {
        const auto code = app.exit(e, out, err);
        return code == 0 ? ok : usage_error;
    }

    try
    {
        if (estimate->parsed())
            run_estimate(est, out);
        else if (comp->parsed())
            run_compare(cmp, out);
        else if (layout->parsed())
            run_layout(lay, out);
        else if (encode->parsed())
            run_encode(enc, out);
        else if (chunk->parsed())
            run_chunk(chk, out);
    }
    catch (const UsageError& e)
    {
        err << "gasledger: " << e.what() << '\n';
        return usage_error;
    }
    catch (const IoError& e)
    {
        err << "gasledger: " << e.what() << '\n';
        return io_error;
    }
    catch (const DomainError& e)
    {
        err << "gasledger: " << e.what() << '\n';
        return domain_error;
    }
    return ok;
}

}  // namespace gasledger::cli
