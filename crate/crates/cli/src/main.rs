use clap::Parser;

fn main() {
    // die quietly when a downstream pipe closes (e.g. `gkm ... | head`)
    let default_hook = std::panic::take_hook();
    std::panic::set_hook(Box::new(move |info| {
        let broken_pipe = info
            .payload()
            .downcast_ref::<String>()
            .map(|s| s.contains("Broken pipe"))
            .unwrap_or(false);
        if broken_pipe {
            std::process::exit(0);
        }
        default_hook(info);
    }));
    let cli = gkm_cli::Cli::parse();
    if let Err(err) = gkm_cli::run(cli) {
        eprintln!("{}", err);
        std::process::exit(gkm_cli::exit_code_for(&err));
    }
}
