package shapes;

public class Gamma {
    private Alpha back;

    public Alpha step() { return back; }
}
