pub struct Dummy2;
