package shapes;

public abstract class Base implements Shape {
    protected abstract double scale();

    public double scaled() {
        return area() * scale();
    }
}
