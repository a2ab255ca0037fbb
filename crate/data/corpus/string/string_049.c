// length of a string
int my_strlen(const char *buf)
{
    int len = 0;
    while (*buf++)
        len++;
    return len;
}

int main()
{
    char buf[1000];
    scanf("%s", buf);
    printf("%d\n", my_strlen(buf));
    return 0;
}
