#include "eccforge/simnet/orders.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace eccforge::simnet {

namespace {

constexpr std::string_view kHeader = "InvoiceNo,StockCode,Description,Quantity,InvoiceDate,UnitPrice,CustomerID,Country";

bool parse_int(const std::string& s, long long& out)
{
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, out);
    return ec == std::errc{} && ptr == end;
}

bool parse_price(const std::string& s, double& out)
{
    if (s.empty())
        return false;
    std::size_t used = 0;
    try {
        out = std::stod(s, &used);
    } catch (const std::exception&) {
        return false;
    }
    return used == s.size();
}

std::string_view strip_cr(std::string_view line)
{
    if (!line.empty() && line.back() == '\r')
        line.remove_suffix(1);
    return line;
}

} // namespace

std::vector<std::string> split_csv_line(std::string_view line)
{
    std::vector<std::string> fields(1);
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    fields.back() += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                fields.back() += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.emplace_back();
        } else {
            fields.back() += c;
        }
    }
    return fields;
}

OrdersFile parse_orders_csv(std::string_view text)
{
    OrdersFile out;
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line) || strip_cr(line) != kHeader)
        throw OrdersError("orders CSV header mismatch");

    while (std::getline(in, line)) {
        const auto view = strip_cr(line);
        if (view.empty())
            continue;
        const auto f = split_csv_line(view);
        OrderRecord r;
        if (f.size() != 8 || !parse_int(f[3], r.quantity) || !parse_price(f[5], r.unit_price) || r.quantity == 0 ||
            r.unit_price < 0) {
            ++out.skipped;
            continue;
        }
        r.invoice_no = f[0];
        r.stock_code = f[1];
        r.description = f[2];
        r.invoice_date = f[4];
        r.customer_id = f[6];
        r.country = f[7];
        out.records.push_back(std::move(r));
    }
    return out;
}

OrdersFile read_orders_csv(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw OrdersError("cannot open orders file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_orders_csv(buf.str());
}

std::string serialize_order(const OrderRecord& order)
{
    nlohmann::ordered_json j;
    j["invoice_no"] = order.invoice_no;
    j["stock_code"] = order.stock_code;
    j["description"] = order.description;
    j["quantity"] = order.quantity;
    j["invoice_date"] = order.invoice_date;
    j["unit_price"] = order.unit_price;
    j["customer_id"] = order.customer_id;
    j["country"] = order.country;
    return j.dump();
}

OrderRecord parse_order_json(std::string_view text)
{
    try {
        const auto j = nlohmann::json::parse(text);
        OrderRecord r;
        r.invoice_no = j.at("invoice_no").get<std::string>();
        r.stock_code = j.at("stock_code").get<std::string>();
        r.description = j.at("description").get<std::string>();
        r.quantity = j.at("quantity").get<long long>();
        r.invoice_date = j.at("invoice_date").get<std::string>();
        r.unit_price = j.at("unit_price").get<double>();
        r.customer_id = j.at("customer_id").get<std::string>();
        r.country = j.at("country").get<std::string>();
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw OrdersError(std::string("malformed order JSON: ") + e.what());
    }
}

} // namespace eccforge::simnet
