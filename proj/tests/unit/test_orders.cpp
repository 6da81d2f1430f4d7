#include "doctest.h"

#include "eccforge/simnet/orders.hpp"
#include "fixtures.hpp"

using namespace eccforge::simnet;

namespace {

const std::string kHeader = "InvoiceNo,StockCode,Description,Quantity,InvoiceDate,UnitPrice,CustomerID,Country\n";

} // namespace

TEST_SUITE("orders")
{
    TEST_CASE("quoted fields and escaped quotes")
    {
        const auto f = split_csv_line(R"(1,"A, B","say ""hi""",,x)");
        REQUIRE(f.size() == 5);
        CHECK(f[1] == "A, B");
        CHECK(f[2] == "say \"hi\"");
        CHECK(f[3].empty());
    }

    TEST_CASE("bundled dataset parses cleanly")
    {
        const OrdersFile f = read_orders_csv(fixtures::data_dir() / "orders.csv");
        CHECK(f.records.size() == 50);
        CHECK(f.skipped == 0);
        for (const auto& r : f.records) {
            CHECK(r.quantity != 0);
            CHECK(r.unit_price >= 0);
            CHECK(r.invoice_date.size() == 19);
        }
        bool comma = false;
        for (const auto& r : f.records)
            comma |= r.description.find(',') != std::string::npos;
        CHECK(comma);
    }

    TEST_CASE("bad rows are skipped and counted")
    {
        const std::string text = kHeader +
                                 "1,S1,ok,2,2010-12-01T08:00:00,1.50,100,France\r\n"
                                 "2,S2,zero qty,0,2010-12-01T08:00:00,1.50,100,France\n"
                                 "3,S3,neg price,1,2010-12-01T08:00:00,-1,100,France\n"
                                 "4,S4,too few,1,2010-12-01T08:00:00,1\n"
                                 "5,S5,bad qty,x,2010-12-01T08:00:00,1,100,France\n"
                                 "\n"
                                 "6,S6,returns,-3,2010-12-01T08:00:00,0,100,Spain\n";
        const OrdersFile f = parse_orders_csv(text);
        CHECK(f.records.size() == 2);
        CHECK(f.skipped == 4);
        CHECK(f.records[0].country == "France");
        CHECK(f.records[1].quantity == -3);
    }

    TEST_CASE("wrong header is rejected")
    {
        CHECK_THROWS_AS(parse_orders_csv("a,b,c\n1,2,3\n"), OrdersError);
        CHECK_THROWS_AS(read_orders_csv("/nonexistent.csv"), OrdersError);
    }

    TEST_CASE("canonical JSON keeps column order and round-trips")
    {
        OrderRecord r{"536365", "85123A", "WHITE \"HANGING\" HEART", 6, "2010-12-01T08:26:00", 2.55, "17850",
                      "United Kingdom"};
        const std::string json = serialize_order(r);
        CHECK(json.rfind(R"({"invoice_no":"536365","stock_code":"85123A","description":)", 0) == 0);
        CHECK(json.find(R"("country":"United Kingdom"})") != std::string::npos);
        CHECK(json.find("invoice_no") < json.find("unit_price"));
        CHECK(parse_order_json(json) == r);
        CHECK(serialize_order(parse_order_json(json)) == json);
        CHECK_THROWS_AS(parse_order_json("{}"), OrdersError);
        CHECK_THROWS_AS(parse_order_json("not json"), OrdersError);
    }
}
