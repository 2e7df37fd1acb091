package ubc.midp.mobilephoto.core.threads;

public class BaseThread {

    public BaseThread() {
        System.out.println("BaseThread:: 0 Param Constructor used ... ");
    }

    /** Start the thread running */
    public void run() {
        System.out.println("Starting BaseThread::run()");
    }
}
