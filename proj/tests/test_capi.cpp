#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "grandedge.h"

namespace {

struct CodeHandle {
    ge_code* code = nullptr;
    CodeHandle(uint32_t n, uint32_t k, uint64_t seed) {
        REQUIRE(ge_code_create_rlc(n, k, seed, &code) == GE_OK);
        REQUIRE(code != nullptr);
    }
    ~CodeHandle() { ge_code_free(code); }
};

}  // namespace

TEST_CASE("library reports a version") {
    CHECK(ge_version() != nullptr);
    CHECK(std::string(ge_version()).find('.') != std::string::npos);
    CHECK(std::string(ge_status_name(GE_OK)) == "ok");
}

TEST_CASE("code creation, encoding and membership") {
    CodeHandle h(16, 10, 3);
    CHECK(ge_code_blocklength(h.code) == 16);
    CHECK(ge_code_dimension(h.code) == 10);

    std::vector<uint8_t> message(10, 0), codeword(16, 0);
    message[0] = message[3] = message[9] = 1;
    REQUIRE(ge_code_encode(h.code, message.data(), codeword.data()) == GE_OK);
    for (int i = 0; i < 10; ++i) CHECK(codeword[i] == message[i]);  // systematic

    int member = 0;
    REQUIRE(ge_code_contains(h.code, codeword.data(), &member) == GE_OK);
    CHECK(member == 1);
    codeword[5] ^= 1;
    REQUIRE(ge_code_contains(h.code, codeword.data(), &member) == GE_OK);
    CHECK(member == 0);
}

TEST_CASE("argument validation surfaces as error codes") {
    ge_code* code = nullptr;
    CHECK(ge_code_create_rlc(16, 16, 1, &code) == GE_ERR_ARGUMENT);
    CHECK(ge_code_create_rlc(16, 0, 1, &code) == GE_ERR_ARGUMENT);
    CHECK(ge_code_create_rlc(16, 10, 1, nullptr) == GE_ERR_ARGUMENT);
    CHECK(ge_grand_decode(nullptr, nullptr, 3, nullptr, nullptr, nullptr) == GE_ERR_ARGUMENT);
    ge_code_free(nullptr);  // must be a no-op
}

TEST_CASE("grand decoding through the C surface") {
    CodeHandle h(16, 10, 3);
    std::vector<uint8_t> message(10, 0), codeword(16, 0);
    for (int i = 0; i < 10; i += 2) message[i] = 1;
    REQUIRE(ge_code_encode(h.code, message.data(), codeword.data()) == GE_OK);

    ge_decode_result result;
    std::vector<uint8_t> decoded_cw(16, 0), decoded_msg(10, 0);
    REQUIRE(ge_grand_decode(h.code, codeword.data(), 3, &result, decoded_cw.data(),
                            decoded_msg.data()) == GE_OK);
    CHECK(result.status == GE_DECODE_SUCCESS);
    CHECK(result.queries == 1);
    CHECK(decoded_msg == message);

    codeword[7] ^= 1;  // one flip is inside the weight budget
    REQUIRE(ge_grand_decode(h.code, codeword.data(), 3, &result, decoded_cw.data(),
                            decoded_msg.data()) == GE_OK);
    CHECK(result.status == GE_DECODE_SUCCESS);
    CHECK(decoded_msg == message);
}

TEST_CASE("edge decoding restores erased bits through the C surface") {
    CodeHandle h(16, 10, 3);
    std::vector<uint8_t> message(10, 1), codeword(16, 0);
    REQUIRE(ge_code_encode(h.code, message.data(), codeword.data()) == GE_OK);

    std::vector<uint8_t> received = codeword;
    const std::vector<uint32_t> erased{2, 9, 13};
    for (auto i : erased) received[i] ^= 1;  // erased slots carry garbage

    ge_decode_result result;
    std::vector<uint8_t> decoded_cw(16, 0), decoded_msg(10, 0);
    REQUIRE(ge_grand_edge_decode(h.code, received.data(), erased.data(),
                                 static_cast<uint32_t>(erased.size()), 3, &result,
                                 decoded_cw.data(), decoded_msg.data()) == GE_OK);
    CHECK(result.status == GE_DECODE_SUCCESS);
    CHECK(result.queries == 1);
    CHECK(decoded_cw == codeword);
    CHECK(decoded_msg == message);

    // non-increasing erasure list is rejected
    const std::vector<uint32_t> bad{9, 2};
    CHECK(ge_grand_edge_decode(h.code, received.data(), bad.data(), 2, 3, &result, nullptr,
                               nullptr) == GE_ERR_ARGUMENT);
}

TEST_CASE("soft decoders accept plain llr buffers") {
    CodeHandle h(16, 10, 3);
    std::vector<uint8_t> message(10, 0), codeword(16, 0);
    message[1] = message[4] = 1;
    REQUIRE(ge_code_encode(h.code, message.data(), codeword.data()) == GE_OK);

    std::vector<double> llr(16);
    for (int i = 0; i < 16; ++i) llr[i] = codeword[i] ? -4.0 : 4.0;
    llr[3] = -llr[3] * 0.01;  // one weak flipped bit

    ge_decode_result result;
    std::vector<uint8_t> decoded_msg(10, 0);
    REQUIRE(ge_orbgrand_decode(h.code, llr.data(), 104, &result, nullptr, decoded_msg.data()) ==
            GE_OK);
    CHECK(result.status == GE_DECODE_SUCCESS);
    CHECK(result.queries == 2);
    CHECK(decoded_msg == message);

    REQUIRE(ge_osd_decode(h.code, llr.data(), 2, &result, nullptr, decoded_msg.data()) == GE_OK);
    CHECK(result.status == GE_DECODE_SUCCESS);
    CHECK(decoded_msg == message);

    REQUIRE(ge_orbgrand_edge_decode(h.code, llr.data(), nullptr, 0, 104, &result, nullptr,
                                    decoded_msg.data()) == GE_OK);
    CHECK(result.status == GE_DECODE_SUCCESS);
    CHECK(decoded_msg == message);
}

TEST_CASE("channel transmission flags the jammed bits") {
    CodeHandle h(64, 50, 9);
    std::vector<uint8_t> message(50, 0), codeword(64, 0);
    REQUIRE(ge_code_encode(h.code, message.data(), codeword.data()) == GE_OK);

    ge_channel_params params;
    ge_channel_params_init(&params);
    CHECK(params.jammer_snr_db == -100.0);
    CHECK(params.sigma_multiplier == 3.0);
    params.snr_db = 10.0;
    params.epsilon = 0.25;

    std::vector<double> y(64), llr(64);
    std::vector<uint8_t> hard(64);
    std::vector<uint32_t> erased(64);
    uint32_t erased_count = 0;
    REQUIRE(ge_channel_transmit(&params, 42, codeword.data(), 64, y.data(), llr.data(),
                                hard.data(), erased.data(), &erased_count) == GE_OK);
    CHECK(erased_count > 5);
    CHECK(erased_count < 40);
    for (uint32_t i = 0; i < 64; ++i) CHECK(hard[i] == (y[i] < 0.0 ? 1 : 0));

    // same seed reproduces the frame bit for bit
    std::vector<double> y2(64);
    REQUIRE(ge_channel_transmit(&params, 42, codeword.data(), 64, y2.data(), nullptr, nullptr,
                                nullptr, nullptr) == GE_OK);
    CHECK(y == y2);
}

TEST_CASE("sweeps run end to end through the C surface") {
    ge_sweep_params params;
    ge_sweep_params_init(&params);
    CHECK(params.lw_max == 104);
    CHECK(params.max_weight == 3);

    params.n = 32;
    params.k = 26;
    params.decoders = "grand,grand-edge";
    const double snr[] = {7.0, 9.0};
    const double eps[] = {0.0, 0.05};
    params.snr_db = snr;
    params.snr_count = 2;
    params.epsilon = eps;
    params.epsilon_count = 2;
    params.trials = 100;
    params.min_block_errors = 0;
    params.threads = 1;

    const char* path = "capi_sweep_test.csv";
    int rows_seen = 0;
    auto on_row = [](const ge_sweep_row* row, void* user) {
        CHECK(row->trials == 100);
        CHECK(row->bler >= 0.0);
        CHECK(row->bler <= 1.0);
        ++*static_cast<int*>(user);
    };
    REQUIRE(ge_sweep_run(&params, path, nullptr, on_row, &rows_seen) == GE_OK);
    CHECK(rows_seen == 8);

    std::ifstream in(path);
    REQUIRE(in.good());
    std::string line;
    int lines = 0;
    while (std::getline(in, line)) ++lines;
    CHECK(lines == 1 + 1 + 8);  // comment, header, rows
    in.close();
    std::remove(path);

    params.decoders = "grand,warp-drive";
    CHECK(ge_sweep_run(&params, path, nullptr, nullptr, nullptr) == GE_ERR_ARGUMENT);
    params.decoders = "grand";
    CHECK(ge_sweep_run(&params, nullptr, nullptr, nullptr, nullptr) == GE_ERR_ARGUMENT);
    params.snr_count = 0;
    CHECK(ge_sweep_run(&params, path, nullptr, nullptr, nullptr) == GE_ERR_ARGUMENT);
}
