fn main() {
    std::process::exit(chebotarev::cli::run());
}
