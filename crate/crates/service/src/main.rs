//! `podo-service [ADDR] [--catalog TSV]`, listening on 127.0.0.1:8080 by default.

use anyhow::Context;
use podosnova::Catalog;
use podosnova_service::{app, AppState};

#[tokio::main]
async fn main() -> anyhow::Result<()> {
    let mut addr = "127.0.0.1:8080".to_string();
    let mut catalog = Catalog::builtin();
    let mut args = std::env::args().skip(1);
    while let Some(a) = args.next() {
        if a == "--catalog" {
            let path = args.next().context("--catalog needs a path")?;
            catalog = Catalog::load(&path).with_context(|| format!("loading {path}"))?;
        } else {
            addr = a;
        }
    }
    let listener = tokio::net::TcpListener::bind(&addr).await.with_context(|| format!("binding {addr}"))?;
    eprintln!("listening on {addr}");
    axum::serve(listener, app(AppState::new(catalog))).await?;
    Ok(())
}
