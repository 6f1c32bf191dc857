fn main() {
    println!("aweno");
}
