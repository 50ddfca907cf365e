fn main() {
    std::process::exit(qcong_harness::run(std::env::args_os().skip(1)));
}
