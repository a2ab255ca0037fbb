// sum of the elements
int main(void)
{
    int data[] = {24, -10, 60, -11, 7, 84, 33, 66, 75, 54};
    int len = sizeof(data) / sizeof(data[0]);
    int sum = 0;
    for (int idx = 0; idx < len; idx++) {
        sum = sum + data[idx];
    }
    printf("%d\n", (int)sum);
    return 0;
}
